#include "liecheck/grading.hpp"

#include <algorithm>
#include <set>

namespace liecheck {

int cochar_weight(const RootSystem& rs, const Cocharacter& c, std::size_t root) {
  if (std::all_of(c.w.begin(), c.w.end(), [](int v) { return v == 0; })) return 0;
  return rs.pairing(rs.root(root).coords, c.w);
}

Cocharacter zero_cocharacter(const RootSystem& rs) { return {"zero", Weight(rs.ambient_dim(), 0)}; }

Cocharacter highest_root_cocharacter(const RootSystem& rs) {
  return {"highest-root", rs.root(rs.highest_root()).coords};
}

Cocharacter h2_cocharacter(const RootSystem& rs) {
  if (rs.kind() != RootKind::C) throw PreconditionError("h2 is defined for type C, got " + rs.name());
  Weight w = rs.epsilon(2);
  for (auto& v : w) v *= -2;
  return {"h2", w};
}

Cocharacter parse_cocharacter(const RootSystem& rs, const std::string& spec) {
  if (spec == "highest-root" || spec == "h1") return highest_root_cocharacter(rs);
  if (spec == "h2") return h2_cocharacter(rs);
  if (spec == "zero") return zero_cocharacter(rs);
  if (spec.size() >= 2 && spec.front() == '[' && spec.back() == ']') {
    Weight w;
    std::string body = spec.substr(1, spec.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const auto comma = body.find(',', pos);
      const auto tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        w.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw UsageError("bad cocharacter weight '" + spec + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (w.size() != rs.ambient_dim())
      throw UsageError("cocharacter weight needs " + std::to_string(rs.ambient_dim()) + " coordinates");
    return {spec, w};
  }
  throw UsageError("unknown cocharacter '" + spec + "'");
}

Grading::Grading(const Algebra& a, Cocharacter c) : c_(std::move(c)), degree_(a.dim(), 0) {
  const auto& rs = a.root_system();
  if (c_.w.size() != rs.ambient_dim()) throw DimensionMismatch("cocharacter weight has wrong length");
  for (std::size_t b = 0; b < a.dim(); ++b) {
    if (auto r = a.basis_root(b)) degree_[b] = cochar_weight(rs, c_, *r);
    parts_[degree_[b]].push_back(b);
  }
}

std::size_t Grading::dim(int i) const {
  auto it = parts_.find(i);
  return it == parts_.end() ? 0 : it->second.size();
}

Grading cochar_grading(const Algebra& a, const Cocharacter& c) {
  Grading g(a, c);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.bracket_basis(i, j))
        if (g.degree(t.index) != g.degree(i) + g.degree(j))
          throw Error("cocharacter " + c.name + " does not grade the bracket");
  for (const auto& [i, part] : g.parts())
    if (g.dim(-i) != part.size()) throw Error("cocharacter grading is not symmetric");
  return g;
}

GVec component(const GVec& x, const Grading& g, int i) {
  if (x.size() != g.algebra_dim()) throw DimensionMismatch("element and grading differ in dimension");
  GVec out(x.size(), x.modulus());
  auto it = g.parts().find(i);
  if (it == g.parts().end()) return out;
  for (auto b : it->second) out.set(b, x[b]);
  return out;
}

std::vector<std::pair<int, GVec>> grade_components(const GVec& x, const Grading& g) {
  std::vector<std::pair<int, GVec>> out;
  for (const auto& [i, part] : g.parts()) {
    GVec c = component(x, g, i);
    if (!c.is_zero()) out.emplace_back(i, std::move(c));
  }
  return out;
}

std::vector<std::size_t> support(const Algebra& a, const GVec& x) {
  a.check_same(x);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < a.root_system().size(); ++r)
    if (x[a.root_basis(r)]) out.push_back(r);
  return out;
}

std::vector<std::size_t> u1_roots(const RootSystem& rs) {
  const auto h1 = highest_root_cocharacter(rs);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rs.size(); ++r)
    if (cochar_weight(rs, h1, r) > 0) out.push_back(r);
  return out;
}

GVec replay(const Algebra& a, const GVec& z, const std::vector<ClearStep>& log) {
  GVec out = z;
  for (const auto& s : log) out = a.adexp(s.root, s.t, out);
  return out;
}

ClearResult clear_support(const Algebra& a, const GVec& z, const std::vector<std::size_t>& forbidden,
                          const std::vector<std::size_t>& unipotent_roots) {
  a.check_same(z);
  const auto& rs = a.root_system();
  const auto h1 = highest_root_cocharacter(rs);
  std::vector<std::size_t> order(forbidden);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const int wx = cochar_weight(rs, h1, x), wy = cochar_weight(rs, h1, y);
    return wx != wy ? wx < wy : x < y;
  });
  order.erase(std::unique(order.begin(), order.end()), order.end());

  ClearResult out{{}, z, true};
  std::vector<std::size_t> done;
  auto hits = [&](const GVec& v, const std::vector<std::size_t>& roots) {
    return std::any_of(roots.begin(), roots.end(), [&](std::size_t r) { return v[a.root_basis(r)] != 0; });
  };

  for (const std::size_t rho : order) {
    const std::size_t target = a.root_basis(rho);
    if (out.z[target] == 0) {
      done.push_back(rho);
      continue;
    }
    bool cleared = false;
    for (const std::size_t delta : unipotent_roots) {
      // coefficient of e_rho in adexp(delta, t, z) is sum_k t^k (D_k z)_rho
      Residue c[4] = {out.z[target], 0, 0, 0};
      for (int k = 1; k <= 3; ++k) c[k] = a.divided_power(delta, k).apply(out.z.coeffs())[target];
      if (c[1] == 0 || c[2] != 0 || c[3] != 0) continue;
      FpMatrix lhs(1, 1, a.p());
      lhs(0, 0) = c[1];
      const std::vector<Residue> rhs{a.field().neg(c[0])};
      const auto t = solve(lhs, rhs);
      if (!t) continue;
      GVec next = a.adexp(delta, (*t)[0], out.z);
      if (next[target] != 0 || hits(next, done)) continue;
      out.log.push_back({delta, (*t)[0], rho});
      out.z = std::move(next);
      cleared = true;
      break;
    }
    if (!cleared) {
      std::string residual;
      for (auto r : support(a, out.z))
        if (std::find(forbidden.begin(), forbidden.end(), r) != forbidden.end())
          residual += (residual.empty() ? "" : " ") + format_weight(rs.root(r).coords);
      throw Error("clear_support: no unipotent generator cancels " + format_weight(rs.root(rho).coords) +
                  "; residual forbidden support {" + residual + "}");
    }
    done.push_back(rho);
  }
  if (hits(out.z, forbidden)) throw Error("clear_support: forbidden roots reappeared");

  if (!order.empty()) {
    const int threshold = cochar_weight(rs, h1, order.front());
    const Grading g(a, h1);
    for (const auto& [i, part] : g.parts()) {
      if (i >= threshold) break;
      if (!(component(out.z, g, i) == component(z, g, i))) out.low_components_preserved = false;
    }
  }
  return out;
}

Limit scaled_limit(const Algebra& a, const GVec& z, const Cocharacter& c, int normalization) {
  a.check_same(z);
  const Grading g(a, c);
  Limit out{0, a.zero()};
  const auto comps = grade_components(z, g);
  if (comps.empty()) return out;
  out.degree = comps.back().first + normalization;
  out.coeff = comps.back().second;
  return out;
}

HeisenbergReport heisenberg_subalgebra(const Algebra& a) {
  const auto& rs = a.root_system();
  if (rs.kind() != RootKind::C) throw PreconditionError("heisenberg_subalgebra needs type C, got " + rs.name());
  if (a.p() == 2) throw PreconditionError("heisenberg_subalgebra needs p != 2");
  const auto named = type_c_roots(rs);
  HeisenbergReport r;
  r.beta = named.beta;
  r.gamma = named.gamma;
  r.lowest = rs.negative(named.highest);
  r.n_beta_gamma = a.sc()(named.beta, named.gamma);
  const GVec eb = a.e(r.beta), eg = a.e(r.gamma);
  const GVec d = a.bracket(eb, eg);
  r.derived_nonzero = !d.is_zero() && d == a.e(r.lowest).scaled(a.field().reduce(r.n_beta_gamma));
  r.centre_relations = a.bracket(eb, d).is_zero() && a.bracket(eg, d).is_zero();
  return r;
}

}  // namespace liecheck
