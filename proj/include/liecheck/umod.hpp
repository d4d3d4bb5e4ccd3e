#pragma once

// Modules with a p-character: baby Verma modules, the freeness test over
// u(z, chi), support-variety points, the restricted nullcone, and the
// inclusion V_g(M) in N_p(g) \cap z_g(chi).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "liecheck/forms.hpp"
#include "liecheck/longroots.hpp"

namespace liecheck {

class Rep {
 public:
  Rep(RootKind kind, int rank, Residue p, std::vector<FpMatrix> action, Functional chi);

  std::size_t dim() const noexcept { return dim_; }
  Residue p() const noexcept { return p_; }
  RootKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return rank_; }
  const Functional& chi() const noexcept { return chi_; }
  const std::vector<FpMatrix>& actions() const noexcept { return action_; }
  const FpMatrix& action(std::size_t basis_index) const { return action_.at(basis_index); }
  // rho(x) = sum_i x_i rho(b_i)
  FpMatrix act(const GVec& x) const;

 private:
  RootKind kind_;
  int rank_;
  Residue p_;
  std::size_t dim_;
  std::vector<FpMatrix> action_;
  Functional chi_;
};

struct RepCheck {
  bool bracket_ok = true;
  bool p_character_ok = true;
  std::string first_failure;
  bool ok() const { return bracket_ok && p_character_ok; }
};

// rho([x, y]) = [rho x, rho y] and rho(x)^p - rho(x^[p]) = chi(x)^p id on basis elements.
RepCheck verify_rep(const Algebra& a, const Rep& m);

// Z_chi(lambda) on PBW monomials prod f_beta^{a_beta}, a_beta < p, negative
// roots in root order. lambda lists the values on h_1..h_l. chi must vanish
// on t + n_+. The result is verified before it is returned.
Rep baby_verma(const Algebra& a, const Functional& chi, const std::vector<Residue>& lambda);

// Ranks of (rho(z) - chi(z))^k for k = 0..p and the resulting block counts.
struct JordanProfile {
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> blocks;  // blocks[k-1] = number of Jordan blocks of size k
};

struct FreenessResult {
  bool free = false;
  Residue eigenvalue = 0;  // chi(z)
  std::size_t rank_top = 0;  // rank((rho(z) - chi(z))^(p-1))
  JordanProfile profile;
};

// z must satisfy z^[p] = 0; throws UnsupportedError otherwise.
FreenessResult freeness_test(const Algebra& a, const Rep& m, const GVec& z);

// z in V_g(M): z^[p] = 0 and M not free over u(z, chi).
bool support_point(const Algebra& a, const Rep& m, const GVec& z);

struct NullconePoints {
  std::vector<GVec> points;
  std::string mode;  // "exhaustive" or "sampled"
  std::uint64_t candidates = 0;  // elements tested
  std::uint64_t seed = 0;
};

struct NullconeOptions {
  std::uint64_t budget = 1'000'000;  // largest p^dim scanned exhaustively
  bool allow_sampling = false;
  std::size_t samples = 0;           // nullcone points wanted in sampling mode
  std::uint64_t seed = 0;
  std::uint64_t max_draws = 50'000'000;
};

// Exhaustive when p^dim <= budget. Otherwise, if sampling is allowed,
// collects distinct nullcone points from a seeded mixture of uniform draws
// and conjugated elements of n_+; else throws ResourceError.
NullconePoints nullcone_enumerate(const Algebra& a, const NullconeOptions& opt);

struct SupportInclusionReport {
  std::uint64_t candidates = 0;
  std::size_t nullcone_points = 0;
  std::size_t support_points = 0;
  std::size_t chi_nonvanishing = 0;       // z with chi([z, g]) != 0
  std::size_t free_when_nonvanishing = 0;  // of those, M free over u(z, chi)
  std::vector<GVec> counterexamples;       // support points with chi([z, g]) != 0
  bool ok() const { return counterexamples.empty() && free_when_nonvanishing == chi_nonvanishing; }
};

SupportInclusionReport support_inclusion_check(const Algebra& a, const Rep& m, const NullconePoints& z);

enum class CheckStatus { pass, fail, not_applicable };
const char* status_name(CheckStatus s);

struct InvertibilityReport {
  CheckStatus status = CheckStatus::not_applicable;
  bool hypothesis = false;  // rho([x, y]) invertible
  FreenessResult freeness;
};

// If [x, y] acts invertibly on M then M is free over u(target, chi).
InvertibilityReport invertibility_implies_freeness_check(const Algebra& a, const Rep& m, const GVec& x,
                                                         const GVec& y, const GVec& target);

struct EigenvalueReport {
  Residue chi_z = 0;
  bool single_eigenvalue = false;  // (rho(z) - chi(z))^dim = 0
};

EigenvalueReport eigenvalue_check(const Algebra& a, const Rep& m, const GVec& z);

struct P2Report {
  std::size_t cone_points = 0;
  std::size_t nullcone_points = 0;
  std::uint64_t pairs = 0;
  std::size_t ad_square_failures = 0;
  std::size_t p_power_failures = 0;
  std::optional<std::pair<GVec, GVec>> first_failure;  // (z, e')
  bool ok() const { return ad_square_failures == 0 && p_power_failures == 0; }
};

// p = 2, type C: (ad e')^2 = 0 for e' in E, and [z, e']^[2] = <z, e'>[z, e'].
P2Report p2_identity_check(const Algebra& a, const InvForm& form, const NullconePoints& z, const ConePoints& e);

// Text format: "REP dim=.. p=.. type=.. rank=..", "CHI v1 .. vn", then for
// each basis element "MATRIX k" followed by dim rows of residues.
void write_rep(std::ostream& os, const Rep& m);
Rep read_rep(std::istream& is);

}  // namespace liecheck
