#include "liecheck/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "liecheck/chevalley.hpp"
#include "liecheck/forms.hpp"
#include "liecheck/grading.hpp"
#include "liecheck/longroots.hpp"
#include "liecheck/umod.hpp"

namespace liecheck {

using nlohmann::json;

namespace {

struct Defaults {
  RootKind kind;
  int rank;
  Residue p;
};

const std::map<std::string, std::pair<Defaults, std::string>>& table() {
  static const std::map<std::string, std::pair<Defaults, std::string>> t{
      {"axioms", {{RootKind::C, 2, 3}, "antisymmetry, Jacobi, structure-constant signs, root-subgroup automorphisms and form invariance on basis tuples"}},
      {"span", {{RootKind::C, 2, 3}, "the long root elements E span g, for any p"}},
      {"lemma32", {{RootKind::C, 2, 5}, "b_f is nonzero on E x E unless f = <u, .> with u in E (type C)"}},
      {"kraft-wallach", {{RootKind::C, 2, 5}, "b_f vanishes on E x E for f = <e, .>, e in E; e^-(t) = e_top + t N e_-beta + 1/2 N N' t^2 e_-2eps2"}},
      {"prop33", {{RootKind::C, 2, 5}, "there exists e in E with f(e) = 0 and f([x, e]) != 0"}},
      {"grading", {{RootKind::C, 2, 5}, "g = g(-2) + g(-1) + g(0) + g(1) + g(2) with g(+-2) = K e_(+-top)"}},
      {"clear-support", {{RootKind::C, 2, 5}, "some g in U_1 has Supp((Ad g) z) disjoint from R_2^-"}},
      {"limit", {{RootKind::C, 2, 5}, "t^2 (Ad h_2(t)) z = t^3 e_gamma + t^2 y_2 + t y_1 + y_0, so e_gamma lies in the support variety"}},
      {"heisenberg", {{RootKind::C, 2, 3}, "e_beta, e_gamma, e_-top span a three-dimensional Heisenberg Lie algebra"}},
      {"centre-u", {{RootKind::C, 3, 3}, "the centre of the nilradical has dimension 1 and is spanned by a long root element"}},
      {"eigenvalue", {{RootKind::C, 2, 3}, "as z^[p] = 0 the only eigenvalue of z on M is chi(z)"}},
      {"freeness-heisenberg", {{RootKind::C, 2, 3}, "[c, c] = K e_-top acts invertibly, so M is free over u(e_gamma, chi)"}},
      {"p2-suite", {{RootKind::C, 2, 2}, "p = 2: (ad e')^2 = 0, [z, e']^[2] = <z, e'>[z, e'], [e_i0, e_(top - i0)] = +-e_top"}},
      {"theorem11", {{RootKind::C, 2, 3}, "V_g(M) lies in N_p(g) intersected with z_g(chi)"}},
      {"dump-roots", {{RootKind::C, 3, 2}, "root table: coordinates, length class, height"}},
      {"dump-sc", {{RootKind::C, 2, 2}, "structure constants N_(alpha,beta) of the Chevalley basis"}},
  };
  return t;
}

std::string describe(const Algebra& a, const GVec& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    if (!out.empty()) out += " + ";
    if (x[i] != 1) out += std::to_string(x[i]) + "*";
    out += a.basis_label(i);
  }
  return out.empty() ? "0" : out;
}

struct Setup {
  RootKind kind;
  int rank;
  Residue p;
};

Setup resolve(const ScenarioParams& sp) {
  const auto& d = table().at(sp.name).first;
  Setup s{sp.kind.value_or(d.kind), sp.rank.value_or(d.rank), sp.p.value_or(d.p)};
  if (!sp.kind && sp.rank) s.rank = *sp.rank;
  if (sp.kind && !sp.rank) {
    switch (s.kind) {
      case RootKind::A: s.rank = 2; break;
      case RootKind::D: s.rank = 4; break;
      case RootKind::E: s.rank = 6; break;
      case RootKind::F: s.rank = 4; break;
      case RootKind::G: s.rank = 2; break;
      default: s.rank = 2; break;
    }
  }
  if (!is_prime(s.p)) throw UsageError("--p must be a prime, got " + std::to_string(s.p));
  return s;
}

void require_type_c(const Algebra& a, const std::string& scenario) {
  if (a.root_system().kind() != RootKind::C)
    throw UsageError(scenario + " is defined for type C, got " + a.root_system().name());
}

void require_odd(const Algebra& a, const std::string& scenario) {
  if (a.p() == 2) throw UsageError(scenario + " needs p != 2");
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

// --- individual scenarios ----------------------------------------------

json run_axioms(const Algebra& a) {
  const auto& rs = a.root_system();
  const std::size_t n = a.dim();
  const Residue p = a.p();
  const auto& F = a.field();
  json c;
  std::uint64_t antisym_bad = 0, jacobi_bad = 0, sc_bad = 0, aut_bad = 0, inv_bad = 0, form_bad = 0;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(a.bracket(a.basis(i), a.basis(j)) == -a.bracket(a.basis(j), a.basis(i)))) ++antisym_bad;

  std::vector<GVec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(a.basis(i));
  std::vector<GVec> br(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) br[i * n + j] = a.bracket(basis[i], basis[j]);
  std::uint64_t triples = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        ++triples;
        GVec s = a.bracket(basis[i], br[j * n + k]);
        s += a.bracket(basis[j], br[k * n + i]);
        s += a.bracket(basis[k], br[i * n + j]);
        if (!s.is_zero()) ++jacobi_bad;
      }

  const auto& sc = a.sc();
  std::uint64_t sc_pairs = 0;
  for (std::size_t x = 0; x < rs.size(); ++x)
    for (std::size_t y = 0; y < rs.size(); ++y) {
      if (!rs.sum(x, y)) {
        if (sc(x, y) != 0) ++sc_bad;
        continue;
      }
      ++sc_pairs;
      if (sc(x, y) != -sc(y, x) || sc(x, y) != -sc(rs.negative(x), rs.negative(y)) ||
          std::abs(sc(x, y)) != rs.string_down(x, y) + 1)
        ++sc_bad;
    }

  std::uint64_t aut_pairs = 0;
  for (std::size_t r = 0; r < rs.size(); ++r)
    for (Residue t = 1; t < p; ++t) {
      std::vector<GVec> img(n);
      for (std::size_t i = 0; i < n; ++i) {
        img[i] = a.adexp(r, t, basis[i]);
        if (!(a.adexp(r, F.neg(t), img[i]) == basis[i])) ++inv_bad;
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          ++aut_pairs;
          if (!(a.adexp(r, t, br[i * n + j]) == a.bracket(img[i], img[j]))) ++aut_bad;
        }
    }

  const InvForm form(a);
  const auto& G = form.gram();
  auto pair_with_basis = [&](const GVec& v, std::size_t k) {
    std::uint64_t acc = 0;
    for (std::size_t m = 0; m < n; ++m)
      if (v[m]) acc += static_cast<std::uint64_t>(v[m]) * G(m, k);
    return static_cast<Residue>(acc % p);
  };
  std::uint64_t form_triples = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        ++form_triples;
        // <[x, y], z> + <y, [x, z]>
        if (F.add(pair_with_basis(br[x * n + y], z), pair_with_basis(br[x * n + z], y)) != 0) ++form_bad;
      }
  const auto top = rs.highest_root();
  const bool normalized = form(a.e(top), a.e(rs.negative(top))) == 1;

  c["basis_pairs"] = n * n;
  c["jacobi_triples"] = triples;
  c["sc_pairs"] = sc_pairs;
  c["automorphism_pairs"] = aut_pairs;
  c["form_triples"] = form_triples;
  c["antisymmetry_failures"] = antisym_bad;
  c["jacobi_failures"] = jacobi_bad;
  c["sc_identity_failures"] = sc_bad;
  c["automorphism_failures"] = aut_bad;
  c["inverse_failures"] = inv_bad;
  c["form_invariance_failures"] = form_bad;
  c["form_radical_dim"] = form.radical().size();
  json r;
  r["counts"] = c;
  r["details"] = {{"form_normalized", normalized}};
  const bool ok = antisym_bad + jacobi_bad + sc_bad + aut_bad + inv_bad + form_bad == 0 && normalized;
  r["status"] = pass_fail(ok);
  return r;
}

json run_span(const Algebra& a, std::uint64_t budget) {
  const auto cone = enumerate_cone(a, budget);
  const auto rk = spanning_rank(cone);
  json r;
  r["counts"] = {{"cone_points", cone.size()}, {"cone_nonzero", cone.nonzero_count()}, {"spanning_rank", rk},
                 {"dim", a.dim()}};
  r["details"] = {{"generators", cone.generator_log()}};
  r["status"] = pass_fail(rk == a.dim());
  return r;
}

json run_lemma32(const Setup& s, std::uint64_t seed, std::size_t samples, std::uint64_t budget) {
  static const std::vector<Residue> ladder{7, 11};
  std::map<Residue, std::unique_ptr<Algebra>> algebras;
  std::map<Residue, std::unique_ptr<InvForm>> forms;
  std::map<Residue, std::unique_ptr<ConePoints>> cones;
  auto get = [&](Residue q) {
    if (!algebras.count(q)) {
      algebras[q] = std::make_unique<Algebra>(build_root_system(s.kind, s.rank), q);
      forms[q] = std::make_unique<InvForm>(*algebras[q]);
      cones[q] = std::make_unique<ConePoints>(enumerate_cone(*algebras[q], budget));
    }
    return q;
  };
  const Residue p = get(s.p);
  const Algebra& a = *algebras[p];
  const bool type_c = s.kind == RootKind::C;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Residue> coeff(0, p - 1);
  std::size_t found_base = 0, escalated = 0, unresolved = 0;
  std::map<std::string, std::size_t> resolved_at;
  json witnesses = json::array();
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<std::int64_t> lift(a.dim());
    GVec u = a.zero();
    do {
      for (std::size_t i = 0; i < a.dim(); ++i) lift[i] = coeff(rng);
      u = a.from_integers(lift);
    } while (u.is_zero() || (type_c && cones[p]->contains(u)));

    bool done = false;
    std::vector<Residue> tried{p};
    for (Residue q : tried) (void)q;
    std::vector<Residue> primes{p};
    for (auto q : ladder)
      if (q > p) primes.push_back(q);
    for (std::size_t level = 0; level < primes.size() && !done; ++level) {
      const Residue q = get(primes[level]);
      const Algebra& aq = *algebras[q];
      const GVec uq = aq.from_integers(lift);
      if (uq.is_zero() || (type_c && cones[q]->contains(uq))) continue;
      const auto f = Functional::from_element(*forms[q], uq);
      if (auto w = find_nonvanishing_b(aq, *forms[q], f, *cones[q])) {
        done = true;
        if (level == 0) ++found_base;
        else ++escalated;
        ++resolved_at[std::to_string(q)];
        if (witnesses.size() < 3)
          witnesses.push_back({{"p", q}, {"u", describe(aq, uq)}, {"x", describe(aq, w->first)}, {"y", describe(aq, w->second)}});
      }
    }
    if (!done) ++unresolved;
  }
  json r;
  r["counts"] = {{"functionals", samples}, {"found_at_base_prime", found_base}, {"escalated", escalated},
                 {"unresolved", unresolved}, {"cone_points", cones[p]->size()}};
  r["details"] = {{"resolved_at_prime", resolved_at}, {"escalation_ladder", ladder}};
  r["witnesses"] = witnesses;
  r["status"] = unresolved ? "fail" : escalated ? "escalate" : "pass";
  return r;
}

json run_kraft_wallach(const Algebra& a, std::uint64_t budget) {
  require_type_c(a, "kraft-wallach");
  const InvForm form(a);
  const auto cone = enumerate_cone(a, budget);
  const auto scan = kraft_wallach_scan(a, form, cone, false);
  json r;
  r["counts"] = {{"cone_points", cone.size()},
                 {"functionals_line_representatives", scan.functionals},
                 {"pairs_evaluated", scan.pairs_evaluated},
                 {"triples_covered", scan.pairs_covered},
                 {"nonzero_values", scan.nonzero}};
  bool display_ok = true;
  json det;
  if (a.p() != 2) {
    const auto d = check_e_minus_display(a);
    display_ok = d.ok();
    det["e_minus_display"] = {{"N_gamma_top", d.n_gamma_highest},
                              {"N_gamma_minus_beta", d.n_gamma_minus_beta},
                              {"half_product", d.half_product},
                              {"t_values_checked", d.values_checked},
                              {"mismatches", d.mismatches}};
  } else {
    det["p2_note"] = "b_f degenerates to f([x, y])^2 at p = 2; e^-(t) display not checked";
  }
  r["details"] = det;
  r["witnesses"] = json::array();
  if (scan.first_nonzero) {
    const auto& [e, x, y] = *scan.first_nonzero;
    r["witnesses"].push_back({{"e", describe(a, e)}, {"x", describe(a, x)}, {"y", describe(a, y)}});
  }
  r["status"] = pass_fail(scan.nonzero == 0 && display_ok);
  return r;
}

// integral h = sum c_i h_i with alpha(h) != 0 mod p for every root
std::optional<std::vector<std::int64_t>> regular_coroot_combination(const Algebra& a) {
  const auto& rs = a.root_system();
  const std::size_t l = a.rank();
  std::vector<std::int64_t> c(l, 1);
  const std::int64_t range = std::min<std::int64_t>(a.p(), 6);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < rs.size() && ok; ++r) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < l; ++i) v += c[i] * rs.pairing(r, rs.simple_roots()[i]);
      ok = a.field().reduce(v) != 0;
    }
    if (ok) return c;
    std::size_t i = 0;
    while (i < l && ++c[i] > range) c[i++] = 1;
    if (i == l) return std::nullopt;
  }
}

json run_prop33(const Setup& s, std::uint64_t budget) {
  std::vector<Residue> primes{s.p};
  for (auto q : escalation_primes())
    if (q > s.p) primes.push_back(q);
  json r;
  json attempts = json::array();
  bool exclusion_enforced = false;
  std::string status = "fail";
  for (std::size_t level = 0; level < primes.size(); ++level) {
    const Algebra a(build_root_system(s.kind, s.rank), primes[level]);
    const InvForm form(a);
    const auto cone = enumerate_cone(a, budget);
    const auto coeffs = regular_coroot_combination(a);
    if (!coeffs) {
      attempts.push_back({{"p", a.p()}, {"result", "no regular semisimple element in the search range"}});
      continue;
    }
    GVec h = a.zero();
    for (std::size_t i = 0; i < a.rank(); ++i) h.set(i, a.field().reduce((*coeffs)[i]));
    const auto f = Functional::from_element(form, h);
    std::size_t tested = 0, found = 0, exhausted = 0;
    json witness;
    const auto top = a.e(a.root_system().highest_root());
    std::vector<GVec> xs{top};
    for (const auto& x : cone.projective())
      if (!(x == top)) xs.push_back(x);
    for (const auto& x : xs) {
      if (annihilates_bracket(a, f, x)) continue;
      ++tested;
      const auto res = find_witness_e(a, form, f, x, cone.points());
      if (res.status == WitnessStatus::found) {
        ++found;
        if (witness.is_null()) witness = {{"x", describe(a, x)}, {"e", describe(a, *res.witness)}};
      } else {
        ++exhausted;
      }
    }
    if (level == 0 && a.root_system().kind() == RootKind::C && a.p() != 2) {
      try {
        find_witness_e(a, form, Functional::from_element(form, top), a.e(a.root_system().negative(a.root_system().highest_root())),
                       cone.points());
      } catch (const PreconditionError&) {
        exclusion_enforced = true;
      }
    }
    attempts.push_back({{"p", a.p()},
                        {"h", describe(a, h)},
                        {"x_tested", tested},
                        {"witnesses_found", found},
                        {"exhausted", exhausted},
                        {"example", witness}});
    if (exhausted == 0 && tested > 0) {
      status = level == 0 ? "pass" : "escalate";
      break;
    }
  }
  if (s.kind == RootKind::C && s.p != 2 && !exclusion_enforced) status = "fail";
  r["details"] = {{"attempts", attempts}, {"excluded_case_rejected", exclusion_enforced}};
  r["status"] = status;
  return r;
}

json run_grading(const Algebra& a, const std::string& cochar) {
  const auto& rs = a.root_system();
  const auto c = parse_cocharacter(rs, cochar);
  const auto g = cochar_grading(a, c);  // throws on a bracket violation
  json dims = json::object();
  for (const auto& [i, part] : g.parts()) dims[std::to_string(i)] = part.size();
  json checks = json::object();
  bool ok = true;
  bool symmetric = true;
  for (const auto& [i, part] : g.parts()) symmetric = symmetric && g.dim(-i) == part.size();
  checks["symmetric_dims"] = symmetric;
  checks["bracket_compatible"] = true;
  ok = ok && symmetric;
  if (c.w == highest_root_cocharacter(rs).w) {
    const auto top = rs.highest_root();
    const bool pm2 = g.dim(2) == 1 && g.dim(-2) == 1 && g.parts().at(2)[0] == a.root_basis(top) &&
                     g.parts().at(-2)[0] == a.root_basis(rs.negative(top)) && g.max_degree() == 2;
    checks["g_pm2_is_top_root_line"] = pm2;
    ok = ok && pm2;
    // ker ad e_top meets the negative part trivially
    std::vector<std::size_t> neg;
    for (const auto& [i, part] : g.parts())
      if (i < 0) neg.insert(neg.end(), part.begin(), part.end());
    FpMatrix m(a.dim(), neg.size(), a.p());
    for (std::size_t col = 0; col < neg.size(); ++col) {
      const auto v = a.bracket(a.e(top), a.basis(neg[col]));
      for (std::size_t row = 0; row < a.dim(); ++row) m(row, col) = v[row];
    }
    const bool kernel = rank(m) == neg.size();
    checks["ker_ad_top_nonnegative"] = kernel;
    ok = ok && kernel;
    if (rs.kind() == RootKind::C) {
      const bool d1 = g.dim(-1) == static_cast<std::size_t>(2 * rs.rank() - 2);
      checks["dim_g_minus1_is_2l_minus_2"] = d1;
      ok = ok && d1;
      // the weight-0 root subgroups move e_gamma onto every nonzero point of g(-1)
      std::vector<std::size_t> levi;
      for (std::size_t r = 0; r < rs.size(); ++r)
        if (cochar_weight(rs, c, r) == 0) levi.push_back(r);
      long double expected = 1;
      for (std::size_t i = 0; i < g.dim(-1); ++i) expected *= a.p();
      if (expected <= 2e6) {
        std::set<std::string> seen;
        std::vector<GVec> frontier{a.e(type_c_roots(rs).gamma)};
        seen.insert(frontier[0].key());
        while (!frontier.empty()) {
          GVec x = frontier.back();
          frontier.pop_back();
          for (auto r : levi) {
            GVec y = a.adexp(r, 1, x);
            if (seen.insert(y.key()).second) frontier.push_back(std::move(y));
          }
        }
        const bool single = static_cast<long double>(seen.size()) == expected - 1;
        checks["g_minus1_single_orbit"] = single;
        checks["g_minus1_orbit_size"] = seen.size();
        ok = ok && single;
      }
    }
  }
  json r;
  r["counts"] = {{"dims", dims}};
  r["details"] = {{"cocharacter", c.name}, {"weight", c.w}, {"checks", checks}};
  r["status"] = pass_fail(ok);
  return r;
}

// z = e_gamma + (random part of nonnegative h_1-degree)
std::vector<GVec> seeded_clear_inputs(const Algebra& a, std::uint64_t seed, std::size_t count) {
  const auto& rs = a.root_system();
  const auto g = cochar_grading(a, highest_root_cocharacter(rs));
  const auto gamma = type_c_roots(rs).gamma;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Residue> coeff(0, a.p() - 1);
  std::vector<GVec> out;
  for (std::size_t k = 0; k < count; ++k) {
    GVec z = a.e(gamma);
    for (std::size_t b = 0; b < a.dim(); ++b)
      if (g.degree(b) >= 0) z.set(b, coeff(rng));
    out.push_back(std::move(z));
  }
  return out;
}

json run_clear_support(const Algebra& a, std::uint64_t seed, std::size_t samples, bool with_limit) {
  require_type_c(a, with_limit ? "limit" : "clear-support");
  require_odd(a, with_limit ? "limit" : "clear-support");
  const auto& rs = a.root_system();
  const auto forbidden = special_set_R2minus(rs);
  const auto unip = u1_roots(rs);
  const auto h2 = h2_cocharacter(rs);
  const auto gamma = type_c_roots(rs).gamma;
  std::size_t cleared = 0, replay_ok = 0, preserved = 0, limit_ok = 0, failures = 0, steps = 0;
  json witnesses = json::array();
  for (const auto& z : seeded_clear_inputs(a, seed, samples)) {
    try {
      const auto res = clear_support(a, z, forbidden, unip);
      steps += res.log.size();
      bool clean = true;
      for (auto r : support(a, res.z))
        if (std::find(forbidden.begin(), forbidden.end(), r) != forbidden.end()) clean = false;
      cleared += clean;
      replay_ok += replay(a, z, res.log) == res.z;
      preserved += res.low_components_preserved;
      const auto lim = scaled_limit(a, res.z, h2, 2);
      const bool lok = lim.degree == 3 && lim.coeff == a.e(gamma);
      limit_ok += lok;
      if (witnesses.size() < 2) {
        json log = json::array();
        for (const auto& st : res.log)
          log.push_back({{"root", format_weight(rs.root(st.root).coords)},
                         {"t", st.t},
                         {"cleared", format_weight(rs.root(st.cleared).coords)}});
        json w{{"z", describe(a, z)}, {"log", log}, {"z_cleared", describe(a, res.z)}};
        if (with_limit) w["limit"] = {{"degree", lim.degree}, {"coefficient", describe(a, lim.coeff)}};
        witnesses.push_back(w);
      }
    } catch (const Error& e) {
      ++failures;
      if (witnesses.size() < 2) witnesses.push_back({{"z", describe(a, z)}, {"error", e.what()}});
    }
  }
  json r;
  json c{{"inputs", samples}, {"cleared", cleared}, {"replay_matches", replay_ok}, {"low_components_preserved", preserved},
         {"failures", failures}, {"adexp_steps", steps}};
  if (with_limit) c["limit_is_e_gamma_at_degree_3"] = limit_ok;
  r["counts"] = c;
  r["details"] = {{"forbidden", [&] {
                     json f = json::array();
                     for (auto x : forbidden) f.push_back(format_weight(rs.root(x).coords));
                     return f;
                   }()},
                  {"order", "increasing h_1-weight, then root order"}};
  r["witnesses"] = witnesses;
  bool ok = failures == 0 && cleared == samples && replay_ok == samples && preserved == samples;
  if (with_limit) ok = ok && limit_ok == samples;
  r["status"] = pass_fail(ok);
  return r;
}

json run_heisenberg(const Algebra& a) {
  require_type_c(a, "heisenberg");
  require_odd(a, "heisenberg");
  const auto h = heisenberg_subalgebra(a);
  const auto& rs = a.root_system();
  json r;
  r["details"] = {{"beta", format_weight(rs.root(h.beta).coords)},
                  {"gamma", format_weight(rs.root(h.gamma).coords)},
                  {"N_beta_gamma", h.n_beta_gamma},
                  {"derived_is_nonzero_multiple_of_e_minus_top", h.derived_nonzero},
                  {"derived_is_central", h.centre_relations}};
  r["status"] = pass_fail(h.ok());
  return r;
}

json run_centre_u(const Algebra& a) {
  require_odd(a, "centre-u");
  const auto& rs = a.root_system();
  std::vector<GVec> nminus;
  for (std::size_t r = rs.num_positive(); r < rs.size(); ++r) nminus.push_back(a.e(r));
  const auto z = a.subalgebra_centre(nminus);
  const std::size_t low = rs.negative(rs.highest_root());
  bool spanned = z.size() == 1 && support(a, z[0]) == std::vector<std::size_t>{low} && z[0][0] == 0;
  for (std::size_t i = 0; i < a.rank() && spanned; ++i) spanned = z[0][i] == 0;
  const bool long_root = rs.root(low).length == LengthClass::long_root;
  json r;
  r["counts"] = {{"centre_dim", z.size()}, {"nilradical_dim", nminus.size()}};
  r["details"] = {{"spanning_vector", z.empty() ? "none" : describe(a, z[0])}, {"long", long_root}};
  r["status"] = pass_fail(spanned && long_root);
  return r;
}

constexpr std::size_t kMaxVermaDim = 2000;
// 2^21 candidates for sp(6) over F_2 are still cheap to scan exhaustively
constexpr std::uint64_t kP2NullconeBudget = std::uint64_t{1} << 22;

Rep top_character_verma(const Algebra& a, Functional& chi_out) {
  long double d = 1;
  for (std::size_t i = 0; i < a.root_system().num_positive(); ++i) d *= a.p();
  if (d > kMaxVermaDim) throw ResourceError("baby Verma module of dimension " + std::to_string(static_cast<unsigned long long>(d)) +
                                            " exceeds the limit of " + std::to_string(kMaxVermaDim));
  const InvForm form(a);
  chi_out = Functional::from_element(form, a.e(a.root_system().highest_root()));
  return baby_verma(a, chi_out, std::vector<Residue>(a.rank(), 0));
}

json run_eigenvalue(const Algebra& a, std::uint64_t seed, std::size_t samples, std::uint64_t budget) {
  require_type_c(a, "eigenvalue");
  Functional chi = Functional::zero(a);
  const Rep m = top_character_verma(a, chi);
  const auto& rs = a.root_system();
  const std::size_t low = a.root_basis(rs.negative(rs.highest_root()));
  NullconeOptions opt;
  opt.budget = budget;
  opt.allow_sampling = true;
  opt.samples = std::max<std::size_t>(samples * 20, 1000);
  opt.seed = seed;
  const auto zs = nullcone_enumerate(a, opt);
  std::vector<GVec> pool;
  for (const auto& z : zs.points)
    if (z[low]) pool.push_back(z);
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (pool.size() > samples) pool.resize(samples);
  std::sort(pool.begin(), pool.end());
  std::size_t single = 0, nonzero_chi = 0;
  for (const auto& z : pool) {
    const auto e = eigenvalue_check(a, m, z);
    single += e.single_eigenvalue;
    nonzero_chi += e.chi_z != 0;
  }
  const auto eg = eigenvalue_check(a, m, a.e(type_c_roots(rs).gamma));
  json r;
  r["counts"] = {{"z_with_nonzero_minus2_component", pool.size()}, {"single_eigenvalue", single},
                 {"chi_z_nonzero", nonzero_chi}, {"module_dim", m.dim()}, {"nullcone_mode", zs.mode}};
  r["details"] = {{"e_gamma", {{"chi", eg.chi_z}, {"single_eigenvalue", eg.single_eigenvalue}}}};
  r["status"] = pass_fail(!pool.empty() && single == pool.size() && nonzero_chi == pool.size() && eg.chi_z == 0 &&
                          eg.single_eigenvalue);
  return r;
}

json profile_json(const FreenessResult& f) {
  return {{"free", f.free}, {"eigenvalue", f.eigenvalue}, {"rank_top_power", f.rank_top}, {"ranks", f.profile.ranks},
          {"blocks_by_size", f.profile.blocks}};
}

json run_freeness_heisenberg(const Algebra& a) {
  require_type_c(a, "freeness-heisenberg");
  require_odd(a, "freeness-heisenberg");
  Functional chi = Functional::zero(a);
  const Rep m = top_character_verma(a, chi);
  const auto& rs = a.root_system();
  const auto named = type_c_roots(rs);
  const auto low = a.root_basis(rs.negative(named.highest));
  const bool lowest_pth = m.action(low).pow(a.p()) == FpMatrix::identity(m.dim(), a.p());
  const auto fr = freeness_test(a, m, a.e(named.gamma));
  const auto inv = invertibility_implies_freeness_check(a, m, a.e(named.beta), a.e(named.gamma), a.e(named.gamma));
  json r;
  r["counts"] = {{"module_dim", m.dim()}, {"rank_rho_e_gamma_pow_p_minus_1", fr.rank_top}, {"expected_rank", m.dim() / a.p()}};
  r["details"] = {{"rho_e_minus_top_pow_p_is_identity", lowest_pth},
                  {"e_gamma", profile_json(fr)},
                  {"invertibility_implies_freeness", status_name(inv.status)}};
  r["status"] = pass_fail(lowest_pth && fr.free && fr.rank_top == m.dim() / a.p() && inv.status == CheckStatus::pass);
  return r;
}

json run_p2_suite(const Algebra& a, std::uint64_t seed, std::size_t samples, std::uint64_t budget) {
  require_type_c(a, "p2-suite");
  if (a.p() != 2) throw UsageError("p2-suite needs --p 2");
  const InvForm form(a);
  const auto cone = enumerate_cone(a);
  NullconeOptions opt;
  opt.budget = budget;
  opt.allow_sampling = true;
  opt.samples = samples;
  opt.seed = seed;
  const auto zs = nullcone_enumerate(a, opt);
  const auto rep = p2_identity_check(a, form, zs, cone);

  json neighbours = json::object();
  bool neighbours_ok = true;
  for (auto [k, l] : {std::pair{RootKind::B, 3}, std::pair{RootKind::F, 4}}) {
    const auto rs = build_root_system(k, l);
    const Algebra b(rs, 2);
    const auto i0 = highest_root_neighbour(rs);
    Weight rest = rs.root(rs.highest_root()).coords;
    for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= rs.root(i0).coords[c];
    const auto j = rs.index_of(rest);
    const bool ok = b.bracket(b.e(i0), b.e(j)) == b.e(rs.highest_root()) && std::abs(b.sc()(i0, j)) == 1;
    neighbours[rs.name()] = {{"alpha_i0", format_weight(rs.root(i0).coords)},
                             {"top_minus_alpha_i0", format_weight(rest)},
                             {"N", b.sc()(i0, j)},
                             {"ok", ok}};
    neighbours_ok = neighbours_ok && ok;
  }

  json inv = json::object();
  bool inv_ok = true;
  if (a.root_system().rank() == 2) {
    // <e_top, .> kills [z, e'] for every e' in E when p = 2, so use chi = 1 on each e_-alpha instead
    std::vector<Residue> vals(a.dim(), 0);
    for (std::size_t r = a.root_system().num_positive(); r < a.root_system().size(); ++r) vals[a.root_basis(r)] = 1;
    const Functional chi(vals, a.p());
    const Rep m = baby_verma(a, chi, std::vector<Residue>(a.rank(), 0));
    std::size_t applicable = 0, passed = 0, pairs = 0;
    for (const auto& z : zs.points)
      for (const auto& e : cone.points()) {
        if (z.is_zero() || e.is_zero()) continue;
        if (chi(a.bracket(z, e)) == 0) continue;
        ++pairs;
        const auto res = invertibility_implies_freeness_check(a, m, z, e, z);
        if (res.status != CheckStatus::not_applicable) ++applicable;
        if (res.status == CheckStatus::pass) ++passed;
        if (res.status == CheckStatus::fail) inv_ok = false;
      }
    inv = {{"chi", "1 on every e_-alpha, 0 on b"},
           {"pairs_with_chi_nonzero", pairs},
           {"hypothesis_holds", applicable},
           {"free", passed},
           {"module_dim", m.dim()}};
    inv_ok = inv_ok && pairs > 0 && applicable > 0;
  } else {
    inv = {{"skipped", "baby Verma module too large for the pair scan"}};
  }

  json r;
  r["counts"] = {{"cone_points", rep.cone_points},
                 {"nullcone_points", rep.nullcone_points},
                 {"nullcone_candidates", zs.candidates},
                 {"pairs", rep.pairs},
                 {"ad_square_failures", rep.ad_square_failures},
                 {"p_power_failures", rep.p_power_failures}};
  r["details"] = {{"nullcone_mode", zs.mode}, {"highest_root_neighbours", neighbours}, {"invertibility_implies_freeness", inv}};
  r["witnesses"] = json::array();
  if (rep.first_failure)
    r["witnesses"].push_back({{"z", describe(a, rep.first_failure->first)}, {"e", describe(a, rep.first_failure->second)}});
  r["status"] = pass_fail(rep.ok() && neighbours_ok && inv_ok);
  return r;
}

json run_theorem11(const Algebra& a, std::uint64_t budget) {
  NullconeOptions opt;
  opt.budget = budget;
  const auto zs = nullcone_enumerate(a, opt);
  json modules = json::array();
  bool ok = true;
  std::uint64_t counterexamples = 0;
  json witnesses = json::array();
  auto run_one = [&](const Rep& m, const std::string& label) {
    const auto rep = support_inclusion_check(a, m, zs);
    ok = ok && rep.ok();
    counterexamples += rep.counterexamples.size();
    for (const auto& z : rep.counterexamples)
      if (witnesses.size() < 5) witnesses.push_back({{"module", label}, {"z", describe(a, z)}});
    modules.push_back({{"module", label},
                       {"dim", m.dim()},
                       {"nullcone_points", rep.nullcone_points},
                       {"support_points", rep.support_points},
                       {"chi_nonvanishing", rep.chi_nonvanishing},
                       {"free_when_chi_nonvanishing", rep.free_when_nonvanishing},
                       {"counterexamples", rep.counterexamples.size()}});
  };
  if (a.root_system().kind() == RootKind::A && a.rank() == 1) {
    for (Residue c : {0u, 1u}) {
      std::vector<Residue> vals(a.dim(), 0);
      vals[a.root_basis(1)] = c;
      const Functional chi(vals, a.p());
      for (Residue lam = 0; lam < a.p(); ++lam)
        run_one(baby_verma(a, chi, {lam}), "chi(f)=" + std::to_string(c) + ",lambda=" + std::to_string(lam));
    }
  } else {
    Functional chi = Functional::zero(a);
    const Rep m = top_character_verma(a, chi);
    run_one(m, "chi=<e_top,.>,lambda=0");
  }
  json r;
  r["counts"] = {{"candidates", zs.candidates}, {"nullcone_points", zs.points.size()}, {"counterexamples", counterexamples}};
  r["details"] = {{"nullcone_mode", zs.mode}, {"modules", modules},
                  {"support_criterion", "z in V_g(M) iff z^[p] = 0 and M is not free over u(z, chi)"}};
  r["witnesses"] = witnesses;
  r["status"] = pass_fail(ok);
  return r;
}

json run_dump_roots(const RootSystem& rs) {
  json lines = json::array();
  for (const auto& r : rs.roots())
    lines.push_back(format_weight(r.coords) + " " + length_name(r.length) + " " + std::to_string(r.height));
  json out;
  out["counts"] = {{"roots", rs.size()}};
  out["details"] = {{"lines", lines}};
  out["status"] = "pass";
  return out;
}

json run_dump_sc(const RootSystem& rs) {
  const SCTable sc(rs);
  json out;
  const auto lines = sc.dump(rs);
  out["counts"] = {{"pairs", lines.size()}};
  out["details"] = {{"lines", lines}};
  out["status"] = "pass";
  return out;
}

}  // namespace

const std::vector<std::string>& scenario_registry() {
  static const std::vector<std::string> names{
      "axioms",    "span",   "lemma32",             "kraft-wallach", "prop33",    "grading",    "clear-support", "limit",
      "heisenberg", "centre-u", "eigenvalue", "freeness-heisenberg", "p2-suite", "theorem11", "dump-roots", "dump-sc"};
  return names;
}

std::size_t registry_index(const std::string& name) {
  const auto& reg = scenario_registry();
  auto it = std::find(reg.begin(), reg.end(), name);
  if (it == reg.end()) throw UsageError("unknown scenario '" + name + "'");
  return static_cast<std::size_t>(it - reg.begin());
}

std::string scenario_claim(const std::string& name) {
  registry_index(name);
  return table().at(name).second;
}

bool status_is_failure(const std::string& status) { return status != "pass" && status != "escalate" && status != "not-applicable"; }

json run_scenario(const ScenarioParams& sp) {
  registry_index(sp.name);
  const auto start = std::chrono::steady_clock::now();
  const Setup s = resolve(sp);
  const std::uint64_t cone_budget = sp.budget.value_or(kDefaultConeBudget);
  const std::uint64_t null_budget = sp.budget.value_or(1'000'000);
  json body;
  const std::string& n = sp.name;
  if (n == "dump-roots") {
    body = run_dump_roots(build_root_system(s.kind, s.rank));
  } else if (n == "dump-sc") {
    body = run_dump_sc(build_root_system(s.kind, s.rank));
  } else if (n == "lemma32") {
    body = run_lemma32(s, sp.seed, sp.samples.value_or(200), cone_budget);
  } else if (n == "prop33") {
    body = run_prop33(s, cone_budget);
  } else {
    const Algebra a(build_root_system(s.kind, s.rank), s.p);
    if (n == "axioms") body = run_axioms(a);
    else if (n == "span") body = run_span(a, cone_budget);
    else if (n == "kraft-wallach") body = run_kraft_wallach(a, cone_budget);
    else if (n == "grading") body = run_grading(a, sp.cochar);
    else if (n == "clear-support") body = run_clear_support(a, sp.seed, sp.samples.value_or(50), false);
    else if (n == "limit") body = run_clear_support(a, sp.seed, sp.samples.value_or(50), true);
    else if (n == "heisenberg") body = run_heisenberg(a);
    else if (n == "centre-u") body = run_centre_u(a);
    else if (n == "eigenvalue") body = run_eigenvalue(a, sp.seed, sp.samples.value_or(40), null_budget);
    else if (n == "freeness-heisenberg") body = run_freeness_heisenberg(a);
    else if (n == "p2-suite") body = run_p2_suite(a, sp.seed, sp.samples.value_or(10000), sp.budget.value_or(kP2NullconeBudget));
    else if (n == "theorem11") body = run_theorem11(a, null_budget);
  }
  json r = body;
  r["scenario"] = n;
  r["claim"] = scenario_claim(n);
  json params{{"type", std::string(1, kind_letter(s.kind))}, {"rank", s.rank}, {"p", s.p}, {"seed", sp.seed}};
  if (sp.samples) params["samples"] = *sp.samples;
  if (sp.budget) params["budget"] = *sp.budget;
  if (n == "grading") params["cochar"] = sp.cochar;
  r["params"] = params;
  r["version"] = kToolVersion;
  r["seed"] = sp.seed;
  if (!r.contains("witnesses")) r["witnesses"] = json::array();
  if (!r.contains("counts")) r["counts"] = json::object();
  if (!r.contains("details")) r["details"] = json::object();
  r["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json strip_timing(json report) {
  report.erase("elapsed_ms");
  return report;
}

int exit_code_for(const std::vector<json>& reports) {
  for (const auto& r : reports)
    if (status_is_failure(r.at("status").get<std::string>())) return 1;
  return 0;
}

}  // namespace liecheck
