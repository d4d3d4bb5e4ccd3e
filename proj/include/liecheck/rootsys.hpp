#pragma once

// Reduced irreducible root systems of types A-G in integral epsilon coordinates.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecheck/errors.hpp"

namespace liecheck {

enum class RootKind { A, B, C, D, E, F, G };
enum class LengthClass { long_root, short_root };

RootKind parse_root_kind(const std::string& s);
char kind_letter(RootKind k);
const char* length_name(LengthClass c);

// A vector in the ambient epsilon basis. F4 and E-type realizations are
// scaled by 2 so every coordinate is an integer.
using Weight = std::vector<int>;

struct Root {
  Weight coords;
  std::vector<int> simple_coeffs;  // in the Bourbaki-numbered simple roots
  LengthClass length;
  int height;
};

class RootSystem {
 public:
  RootSystem(RootKind kind, int rank);

  RootKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;
  std::size_t ambient_dim() const noexcept { return ambient_; }

  // Positive roots ordered by height, ties by descending lexicographic
  // coordinates; then the negatives in the same order. Root i+P is -(root i).
  const std::vector<Root>& roots() const noexcept { return roots_; }
  const Root& root(std::size_t i) const { return roots_.at(i); }
  std::size_t size() const noexcept { return roots_.size(); }
  std::size_t num_positive() const noexcept { return roots_.size() / 2; }
  bool is_positive(std::size_t i) const noexcept { return i < num_positive(); }
  std::size_t negative(std::size_t i) const noexcept {
    return i < num_positive() ? i + num_positive() : i - num_positive();
  }

  std::optional<std::size_t> find(const Weight& w) const;
  std::size_t index_of(const Weight& w) const;  // throws if w is not a root
  // Index of root(i)+root(j) when it is a root.
  std::optional<std::size_t> sum(std::size_t i, std::size_t j) const;

  // Simple roots in Bourbaki numbering.
  const std::vector<std::size_t>& simple_roots() const noexcept { return simple_; }
  // a_ij = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j)
  const std::vector<std::vector<int>>& cartan_matrix() const noexcept { return cartan_; }
  std::size_t highest_root() const noexcept { return highest_; }
  int long_norm() const noexcept { return long_norm_; }
  std::size_t count_long() const;

  int inner(const Weight& a, const Weight& b) const;
  int inner(std::size_t i, std::size_t j) const { return inner(roots_[i].coords, roots_[j].coords); }
  int norm(std::size_t i) const { return inner(i, i); }

  // <d, a> = 2(d, a)/(a, a); linear in d. Throws PreconditionError when a = 0
  // or the value is not an integer.
  int pairing(const Weight& d, const Weight& a) const;
  int pairing(std::size_t d, std::size_t a) const { return pairing(roots_[d].coords, roots_[a].coords); }

  // Largest r with root(j) - r root(i) a root (zero when root(j)-root(i) is not).
  int string_down(std::size_t i, std::size_t j) const;

  // Unit vector epsilon_k (1-based) in the unscaled coordinates of classical types.
  Weight epsilon(int k) const;

 private:
  void generate(const std::vector<Weight>& simple_coords);

  RootKind kind_;
  int rank_;
  std::size_t ambient_ = 0;
  std::vector<Root> roots_;
  std::vector<std::size_t> simple_;
  std::vector<std::vector<int>> cartan_;
  std::map<Weight, std::size_t> index_;
  std::vector<int> sum_table_;  // -1 when not a root
  std::size_t highest_ = 0;
  int long_norm_ = 0;
};

RootSystem build_root_system(RootKind kind, int rank);

// Classical root counts, used as an independent check on generation.
std::size_t expected_root_count(RootKind kind, int rank);
std::size_t expected_long_root_count(RootKind kind, int rank);

// Roots used by the type C arguments, in epsilon coordinates.
struct TypeCRoots {
  std::size_t highest;         // 2 eps_1
  std::size_t beta;            // -(eps_1 - eps_2)
  std::size_t gamma;           // -(eps_1 + eps_2)
  std::size_t minus_two_eps2;  // -2 eps_2
};
TypeCRoots type_c_roots(const RootSystem& rs);

// {-2eps_2, eps_1-eps_2} together with {-eps_2 +- eps_j : 3 <= j <= l}.
std::vector<std::size_t> special_set_R2minus(const RootSystem& rs);

// The first simple root alpha_i0 (Bourbaki order) with <highest, alpha_i0^vee> != 0,
// so that highest - alpha_i0 is again a long root.
std::size_t highest_root_neighbour(const RootSystem& rs);

std::string format_weight(const Weight& w);

}  // namespace liecheck
