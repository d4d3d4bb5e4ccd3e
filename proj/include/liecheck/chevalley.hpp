#pragma once

// Lie(G) over F_p in a Chevalley basis: h_1..h_l followed by e_alpha in root
// order. Structure constants are fixed over Z by the extraspecial-pair rule
// and reduced mod p.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liecheck/fieldlin.hpp"
#include "liecheck/rootsys.hpp"

namespace liecheck {

// A Lie algebra element: coefficients over F_p in the Chevalley basis.
class GVec {
 public:
  GVec() : p_(2) {}
  GVec(std::size_t dim, Residue p) : p_(p), c_(dim, 0) {}
  GVec(std::vector<Residue> coeffs, Residue p);

  static GVec unit(std::size_t dim, std::size_t i, Residue p);

  std::size_t size() const noexcept { return c_.size(); }
  Residue modulus() const noexcept { return p_; }
  Residue operator[](std::size_t i) const { return c_[i]; }
  void set(std::size_t i, Residue v) { c_[i] = v % p_; }
  std::span<const Residue> coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept;

  GVec& operator+=(const GVec& o);
  GVec& operator-=(const GVec& o);
  GVec operator+(const GVec& o) const { return GVec(*this) += o; }
  GVec operator-(const GVec& o) const { return GVec(*this) -= o; }
  GVec operator-() const;
  GVec scaled(Residue s) const;
  // this += s * o
  void axpy(Residue s, const GVec& o);

  // Canonical byte encoding, used for deduplication and deterministic ordering.
  std::string key() const;
  std::string to_string() const;

  bool operator==(const GVec& o) const noexcept { return p_ == o.p_ && c_ == o.c_; }
  bool operator<(const GVec& o) const noexcept { return c_ < o.c_; }

 private:
  void check(const GVec& o) const;

  Residue p_;
  std::vector<Residue> c_;
};

// Integral structure constants N_{alpha,beta} of a Chevalley basis.
class SCTable {
 public:
  explicit SCTable(const RootSystem& rs);

  // N_{a,b} for root indices; 0 when root(a)+root(b) is not a root.
  int operator()(std::size_t a, std::size_t b) const { return n_[a * size_ + b]; }
  // Coefficients of h_alpha = [e_alpha, e_-alpha] in h_1..h_l.
  const std::vector<int>& coroot(std::size_t a) const { return coroot_[a]; }
  // Extraspecial pairs (alpha, beta) with alpha + beta = xi, one per non-simple positive xi.
  const std::vector<std::pair<std::size_t, std::size_t>>& extraspecial() const { return extraspecial_; }

  // "alpha beta N" lines, one per ordered pair with alpha+beta a root.
  std::vector<std::string> dump(const RootSystem& rs) const;

 private:
  std::size_t size_;
  std::vector<int> n_;
  std::vector<std::vector<int>> coroot_;
  std::vector<std::pair<std::size_t, std::size_t>> extraspecial_;
};

struct IntTerm {
  std::size_t index;
  std::int64_t coeff;
};

struct ResTerm {
  std::size_t index;
  Residue coeff;
};

class Algebra {
 public:
  Algebra(RootSystem rs, Residue p);

  const RootSystem& root_system() const noexcept { return rs_; }
  const SCTable& sc() const noexcept { return sc_; }
  Residue p() const noexcept { return field_.p(); }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(rs_.rank()); }
  std::string name() const;

  std::size_t root_basis(std::size_t root) const noexcept { return rank() + root; }
  std::optional<std::size_t> basis_root(std::size_t b) const noexcept {
    if (b < rank()) return std::nullopt;
    return b - rank();
  }
  std::string basis_label(std::size_t b) const;

  GVec zero() const { return GVec(dim_, p()); }
  GVec basis(std::size_t b) const { return GVec::unit(dim_, b, p()); }
  GVec e(std::size_t root) const { return basis(root_basis(root)); }
  GVec h(std::size_t i) const { return basis(i); }
  // h_alpha = [e_alpha, e_-alpha]
  GVec coroot(std::size_t root) const;
  GVec from_integers(std::span<const std::int64_t> coeffs) const;

  // Bracket of basis elements over Z and mod p.
  const std::vector<IntTerm>& bracket_z(std::size_t i, std::size_t j) const { return table_z_[i * dim_ + j]; }
  const std::vector<ResTerm>& bracket_basis(std::size_t i, std::size_t j) const { return table_p_[i * dim_ + j]; }

  GVec bracket(const GVec& x, const GVec& y) const;
  FpMatrix ad(const GVec& x) const;

  // Ad x_alpha(t) = sum_k t^k (ad e_alpha)^k / k!, the divided powers taken
  // in the Z-form before reduction.
  GVec adexp(std::size_t root, Residue t, const GVec& x) const;
  // Matrix of (ad e_alpha)^k / k! over F_p, k = 0..3.
  FpMatrix divided_power(std::size_t root, int k) const;

  // Restricted p-map, computed in a faithful restricted representation.
  GVec p_power(const GVec& x) const;
  // True when iterating the p-map reaches 0.
  bool is_p_nilpotent(const GVec& x) const;
  // Name of the representation behind p_power ("defining" / "adjoint"), or
  // throws UnsupportedError for configurations without one.
  std::string p_map_route() const;

  std::vector<GVec> centre() const;
  // Centre of the subalgebra spanned by the given elements (must be closed).
  std::vector<GVec> subalgebra_centre(const std::vector<GVec>& span) const;

  void check_same(const GVec& x) const;

 private:
  struct PMap;
  const PMap& pmap() const;

  RootSystem rs_;
  SCTable sc_;
  PrimeField field_;
  std::size_t dim_;
  std::vector<std::vector<IntTerm>> table_z_;
  std::vector<std::vector<ResTerm>> table_p_;
  // per root, per k in 1..3: sparse columns of (ad e_alpha)^k/k! mod p
  std::vector<std::array<std::vector<std::vector<ResTerm>>, 3>> divided_;
  mutable std::once_flag pmap_once_;
  mutable std::shared_ptr<const PMap> pmap_;
  mutable std::string pmap_error_;
};

Algebra build_algebra(const RootSystem& rs, Residue p);

// The three-term e^-(t) display in type C:
//   Ad x_gamma(t) e_{2eps1} = e_{2eps1} + t N_{gamma,2eps1} e_{-beta}
//                              + 1/2 N_{gamma,2eps1} N_{gamma,-beta} t^2 e_{-2eps2}.
struct EMinusCheck {
  int n_gamma_highest = 0;
  int n_gamma_minus_beta = 0;
  std::int64_t half_product = 0;
  std::size_t values_checked = 0;
  std::vector<Residue> mismatches;  // t values that disagreed
  bool ok() const { return mismatches.empty() && values_checked > 0; }
};
EMinusCheck check_e_minus_display(const Algebra& a);

}  // namespace liecheck
