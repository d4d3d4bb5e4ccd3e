#pragma once

// The invariant form, linear functionals and the Kraft-Wallach form b_f.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liecheck/chevalley.hpp"

namespace liecheck {

// Invariant form on the Chevalley Z-form normalized by <e_top, e_-top> = 1,
// reduced mod p.
class InvForm {
 public:
  explicit InvForm(const Algebra& a);

  const FpMatrix& gram() const noexcept { return gram_; }
  Residue operator()(const GVec& x, const GVec& y) const;
  // Row vector G x, so that <x, y> = dual(x) . y.
  GVec dual(const GVec& x) const;

  const std::vector<GVec>& radical() const noexcept { return radical_; }
  bool nondegenerate() const noexcept { return radical_.empty(); }
  // The unique u with <u, .> = f; needs a nondegenerate form.
  GVec represent(std::span<const Residue> values) const;

 private:
  Residue p_;
  FpMatrix gram_;
  std::vector<GVec> radical_;
  std::optional<FpMatrix> inverse_;
};

InvForm build_form(const Algebra& a);

// A linear functional on g, stored by its values on the basis. When it was
// built as <u, .> the element u is kept.
class Functional {
 public:
  Functional(std::vector<Residue> values, Residue p);
  static Functional from_element(const InvForm& form, const GVec& u);
  static Functional zero(const Algebra& a);

  Residue operator()(const GVec& x) const;
  const std::vector<Residue>& values() const noexcept { return values_; }
  Residue modulus() const noexcept { return p_; }
  const std::optional<GVec>& element() const noexcept { return element_; }
  bool is_zero() const;
  std::string to_string() const;

 private:
  std::vector<Residue> values_;
  Residue p_;
  std::optional<GVec> element_;
};

// b_f(x, y) = f([x, y])^2 + 4 f(x) f(y) <x, y>
Residue b_form(const Algebra& a, const InvForm& form, const Functional& f, const GVec& x, const GVec& y);

// z_g(chi) = {x : chi([x, g]) = 0}
std::vector<GVec> coadjoint_centralizer(const Algebra& a, const Functional& chi);

// True when chi([x, g]) = 0.
bool annihilates_bracket(const Algebra& a, const Functional& chi, const GVec& x);

enum class WitnessStatus { found, exhausted };

struct WitnessResult {
  WitnessStatus status = WitnessStatus::exhausted;
  std::optional<GVec> witness;
  std::size_t points_checked = 0;
};

// Some e among the points with f(e) = 0 and f([x, e]) != 0. Hypothesis
// violations (x not p-nilpotent, f([x, g]) = 0, or in type C with p odd f of
// the form <u, .> with u a long root element) raise PreconditionError; an
// empty search is returned as exhausted.
WitnessResult find_witness_e(const Algebra& a, const InvForm& form, const Functional& f, const GVec& x,
                             std::span<const GVec> points);

// The fixed prime ladder used when an F_p search finds no witness.
const std::vector<Residue>& escalation_primes();
std::optional<Residue> next_escalation_prime(Residue p);

}  // namespace liecheck
