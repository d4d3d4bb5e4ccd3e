#pragma once

// Gradings of g by cocharacter weights, root supports, conjugation by U_1 to
// clear a prescribed set of roots from a support, and scaling limits.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liecheck/chevalley.hpp"

namespace liecheck {

// delta -> <delta, w>, extended linearly. w = 0 gives the trivial grading.
struct Cocharacter {
  std::string name;
  Weight w;
};

int cochar_weight(const RootSystem& rs, const Cocharacter& c, std::size_t root);

Cocharacter zero_cocharacter(const RootSystem& rs);
// h_1: w = highest root.
Cocharacter highest_root_cocharacter(const RootSystem& rs);
// h_2: w = -2 eps_2 (type C).
Cocharacter h2_cocharacter(const RootSystem& rs);
// "highest-root", "h2", "zero" or an explicit weight like "[2,0,0]".
Cocharacter parse_cocharacter(const RootSystem& rs, const std::string& spec);

class Grading {
 public:
  Grading(const Algebra& a, Cocharacter c);

  const Cocharacter& cocharacter() const noexcept { return c_; }
  int degree(std::size_t basis_index) const { return degree_.at(basis_index); }
  const std::map<int, std::vector<std::size_t>>& parts() const noexcept { return parts_; }
  // dim g(i), zero outside the support
  std::size_t dim(int i) const;
  int min_degree() const { return parts_.begin()->first; }
  int max_degree() const { return parts_.rbegin()->first; }
  std::size_t algebra_dim() const noexcept { return degree_.size(); }

 private:
  Cocharacter c_;
  std::vector<int> degree_;
  std::map<int, std::vector<std::size_t>> parts_;
};

// Also verifies [g(i), g(j)] in g(i+j) on basis pairs.
Grading cochar_grading(const Algebra& a, const Cocharacter& c);

// Nonzero homogeneous components (i, z_i), increasing in i.
std::vector<std::pair<int, GVec>> grade_components(const GVec& x, const Grading& g);
// The part of x in degree i (zero if none).
GVec component(const GVec& x, const Grading& g, int i);

// Roots with nonzero coefficient; the Cartan part is ignored.
std::vector<std::size_t> support(const Algebra& a, const GVec& x);

// Roots of U_1: positive weight under h_1.
std::vector<std::size_t> u1_roots(const RootSystem& rs);

struct ClearStep {
  std::size_t root;     // adexp generator
  Residue t;
  std::size_t cleared;  // forbidden root removed by this step
};

struct ClearResult {
  std::vector<ClearStep> log;
  GVec z;
  // h_1-components of degree below every forbidden root are untouched
  bool low_components_preserved = true;
};

// Conjugate z by root elements of the given unipotent roots until no
// forbidden root lies in its support. Forbidden roots are handled in
// increasing h_1-weight, each by a single generator whose action on the
// forbidden coefficient is affine in t.
ClearResult clear_support(const Algebra& a, const GVec& z, const std::vector<std::size_t>& forbidden,
                          const std::vector<std::size_t>& unipotent_roots);

GVec replay(const Algebra& a, const GVec& z, const std::vector<ClearStep>& log);

struct Limit {
  int degree = 0;
  GVec coeff;  // zero when the input is zero
};

// Top coefficient of t^normalization (Ad c(t)) z viewed as a Laurent
// polynomial in t.
Limit scaled_limit(const Algebra& a, const GVec& z, const Cocharacter& c, int normalization);

struct HeisenbergReport {
  std::size_t beta = 0, gamma = 0, lowest = 0;
  int n_beta_gamma = 0;
  bool centre_relations = false;  // [e_beta,[e_beta,e_gamma]] = [e_gamma,[e_beta,e_gamma]] = 0
  bool derived_nonzero = false;   // [e_beta,e_gamma] = c e_-top with c != 0 mod p
  bool ok() const { return centre_relations && derived_nonzero; }
};

// The span of e_beta, e_gamma, e_-top in type C; p must be odd.
HeisenbergReport heisenberg_subalgebra(const Algebra& a);

}  // namespace liecheck
