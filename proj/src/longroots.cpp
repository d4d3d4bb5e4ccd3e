#include "liecheck/longroots.hpp"

#include <algorithm>
#include <deque>

namespace liecheck {

ConePoints::ConePoints(Residue p, std::vector<GVec> points, std::vector<std::string> generator_log)
    : p_(p), points_(std::move(points)), log_(std::move(generator_log)) {
  std::sort(points_.begin(), points_.end());
  keys_.reserve(points_.size());
  for (const auto& x : points_) keys_.insert(x.key());
}

std::vector<GVec> ConePoints::projective() const {
  std::vector<GVec> out;
  for (const auto& x : points_) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i]) continue;
      if (x[i] == 1) out.push_back(x);
      break;
    }
  }
  return out;
}

ConePoints enumerate_cone(const Algebra& a, std::size_t budget) {
  const auto& rs = a.root_system();
  std::unordered_set<std::string> seen;
  std::vector<GVec> points;
  std::deque<std::size_t> frontier;
  auto add = [&](GVec v) {
    if (seen.insert(v.key()).second) {
      if (points.size() >= budget)
        throw ResourceError("cone of " + a.name() + " exceeds the budget of " + std::to_string(budget) + " points");
      frontier.push_back(points.size());
      points.push_back(std::move(v));
    }
  };
  add(a.zero());
  const GVec top = a.e(rs.highest_root());
  for (Residue c = 1; c < a.p(); ++c) add(top.scaled(c));
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    for (std::size_t r = 0; r < rs.size(); ++r) add(a.adexp(r, 1, points[idx]));
  }
  std::vector<std::string> log{"seed: F_p^* e" + format_weight(rs.root(rs.highest_root()).coords),
                               "generators: adexp(alpha, 1, .) for all " + std::to_string(rs.size()) +
                                   " roots (x_alpha(1) generates x_alpha(t), t in F_p)",
                               "plus the zero vector"};
  return ConePoints(a.p(), std::move(points), std::move(log));
}

bool rank_criterion(const Algebra& a, const GVec& x) {
  const FpMatrix m = a.ad(x);
  return rank(m * m) == 1;
}

bool is_long_root_element(const Algebra& a, const GVec& x, const ConePoints& e) {
  a.check_same(x);
  if (e.p() != a.p()) throw ModulusMismatch("cone and algebra over different fields");
  const bool member = e.contains(x);
  if (a.p() >= 5 && !x.is_zero() && member != rank_criterion(a, x))
    throw Error("cone membership and the (ad x)^2 rank criterion disagree at " + x.to_string());
  return member;
}

std::size_t spanning_rank(const ConePoints& e) {
  if (e.points().empty()) return 0;
  const std::size_t n = e.points().front().size();
  EchelonBasis eb(n, e.p());
  for (const auto& x : e.points()) {
    eb.insert(x.coeffs());
    if (eb.dim() == n) break;
  }
  return eb.dim();
}

std::vector<GVec> cone_in_degree(const ConePoints& e, const Grading& g, int i) {
  std::vector<GVec> out;
  for (const auto& x : e.points()) {
    bool in = true;
    for (std::size_t b = 0; b < x.size() && in; ++b)
      if (x[b] && g.degree(b) != i) in = false;
    if (in) out.push_back(x);
  }
  return out;
}

namespace {

FpMatrix stack_rows(const std::vector<GVec>& v, std::size_t n, Residue p) {
  FpMatrix m(v.size(), n, p);
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r][c];
  return m;
}

}  // namespace

KWScan kraft_wallach_scan(const Algebra& a, const InvForm& form, const ConePoints& e, bool projective_xy) {
  const Residue p = a.p();
  const std::size_t n = a.dim();
  const auto& F = a.field();
  const std::vector<GVec> es = e.projective();
  std::vector<GVec> xs;
  if (projective_xy) {
    xs = es;
  } else {
    for (const auto& x : e.points())
      if (!x.is_zero()) xs.push_back(x);
  }
  const std::size_t m = xs.size();

  KWScan out;
  out.projective_xy = projective_xy;
  out.functionals = es.size();
  const std::uint64_t nz = e.nonzero_count();
  out.pairs_covered = nz * nz * nz;  // zero points contribute b = 0 trivially

  // <x, y> over the points, independent of e
  const FpMatrix X = stack_rows(xs, n, p);
  std::vector<GVec> duals;
  duals.reserve(m);
  for (const auto& x : xs) duals.push_back(form.dual(x));
  const FpMatrix D = stack_rows(duals, n, p);
  const FpMatrix Xt = X.transpose();
  const FpMatrix gram = D * Xt;

  const Residue four = F.reduce(4);
  for (const auto& ev : es) {
    // f = <e, .>; f([x, y]) = <[e, x], y>
    const GVec fe = form.dual(ev);
    std::vector<GVec> u;
    u.reserve(m);
    std::vector<Residue> fx(m);
    for (std::size_t i = 0; i < m; ++i) {
      u.push_back(form.dual(a.bracket(ev, xs[i])));
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += static_cast<std::uint64_t>(fe[k]) * xs[i][k];
      fx[i] = static_cast<Residue>(acc % p);
    }
    const FpMatrix fb = stack_rows(u, n, p) * Xt;
    for (std::size_t i = 0; i < m; ++i) {
      const Residue ci = F.mul(four, fx[i]);
      const auto frow = fb.row(i);
      const auto grow = gram.row(i);
      for (std::size_t j = i; j < m; ++j) {
        const std::uint64_t v = (static_cast<std::uint64_t>(frow[j]) * frow[j] +
                                 static_cast<std::uint64_t>(F.mul(ci, fx[j])) * grow[j]) %
                                p;
        if (v != 0) {
          ++out.nonzero;
          if (!out.first_nonzero) out.first_nonzero = std::make_tuple(ev, xs[i], xs[j]);
        }
      }
    }
    out.pairs_evaluated += static_cast<std::uint64_t>(m) * (m + 1) / 2;
  }
  return out;
}

std::optional<std::pair<GVec, GVec>> find_nonvanishing_b(const Algebra& a, const InvForm& form, const Functional& f,
                                                         const ConePoints& e) {
  const std::vector<GVec> xs = e.projective();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (b_form(a, form, f, xs[i], xs[j]) != 0) return std::make_pair(xs[i], xs[j]);
  return std::nullopt;
}

}  // namespace liecheck
