#pragma once

// The cone E(F_p) of long root elements, enumerated as the orbit of
// F_p^* e_top under the root subgroups, plus 0.

#include <optional>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "liecheck/forms.hpp"
#include "liecheck/grading.hpp"

namespace liecheck {

class ConePoints {
 public:
  ConePoints(Residue p, std::vector<GVec> points, std::vector<std::string> generator_log);

  // Sorted by coefficient vector; the zero vector comes first.
  const std::vector<GVec>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::size_t nonzero_count() const noexcept { return points_.size() - 1; }
  bool contains(const GVec& x) const { return keys_.count(x.key()) > 0; }
  const std::vector<std::string>& generator_log() const noexcept { return log_; }
  Residue p() const noexcept { return p_; }

  // One point per line F_p^* x: the nonzero points whose first nonzero
  // coefficient is 1.
  std::vector<GVec> projective() const;

 private:
  Residue p_;
  std::vector<GVec> points_;
  std::unordered_set<std::string> keys_;
  std::vector<std::string> log_;
};

constexpr std::size_t kDefaultConeBudget = 10'000'000;

// Throws ResourceError when more than `budget` points would be produced.
ConePoints enumerate_cone(const Algebra& a, std::size_t budget = kDefaultConeBudget);

// rank((ad x)^2) = 1
bool rank_criterion(const Algebra& a, const GVec& x);

// Membership; for p >= 5 and x != 0 also checks agreement with the rank
// criterion and throws Error on disagreement.
bool is_long_root_element(const Algebra& a, const GVec& x, const ConePoints& e);

std::size_t spanning_rank(const ConePoints& e);

// Points lying in g(i).
std::vector<GVec> cone_in_degree(const ConePoints& e, const Grading& g, int i);

struct KWScan {
  std::size_t functionals = 0;         // projective representatives e
  std::uint64_t pairs_evaluated = 0;   // (x, y) pairs actually evaluated
  std::uint64_t pairs_covered = 0;     // (e, x, y) triples over all of E accounted for
  std::uint64_t nonzero = 0;
  bool projective_xy = false;
  std::optional<std::tuple<GVec, GVec, GVec>> first_nonzero;  // (e, x, y)
};

// b_{<e,.>}(x, y) over every e, x, y in E. e runs over line representatives
// (b_{cf} = c^2 b_f); with projective_xy the same reduction is applied to x
// and y (b_f(sx, ty) = s^2 t^2 b_f(x, y)).
KWScan kraft_wallach_scan(const Algebra& a, const InvForm& form, const ConePoints& e, bool projective_xy);

// Some (x, y) in E x E with b_f(x, y) != 0.
std::optional<std::pair<GVec, GVec>> find_nonvanishing_b(const Algebra& a, const InvForm& form, const Functional& f,
                                                         const ConePoints& e);

}  // namespace liecheck
