#include <sstream>

#include "doctest.h"
#include "liecheck/umod.hpp"

using namespace liecheck;

namespace {

Functional chi_f(const Algebra& a, Residue v) {
  std::vector<Residue> vals(a.dim(), 0);
  vals[a.root_basis(a.root_system().negative(0))] = v;
  return Functional(vals, a.p());
}

Rep single_block(Residue p) {
  // sl2 acting through e = one nilpotent Jordan block; only used for freeness
  const Algebra a(build_root_system(RootKind::A, 1), p);
  std::vector<FpMatrix> mats(3, FpMatrix(p, p, p));
  for (std::size_t i = 0; i + 1 < p; ++i) mats[1](i, i + 1) = 1;
  return Rep(RootKind::A, 1, p, mats, Functional::zero(a));
}

}  // namespace

TEST_CASE("baby Verma for sl2 over F3") {
  const Algebra a(build_root_system(RootKind::A, 1), 3);
  const auto m = baby_verma(a, Functional::zero(a), {0});
  CHECK(m.dim() == 3);
  const auto& h = m.action(0);
  const auto& e = m.action(1);
  const auto& f = m.action(2);
  CHECK(e * f - f * e == h);
  CHECK(verify_rep(a, m).ok());
}

TEST_CASE("baby Verma p-character relations") {
  const Algebra sl2(build_root_system(RootKind::A, 1), 5);
  const auto m = baby_verma(sl2, chi_f(sl2, 1), {2});
  CHECK(m.dim() == 5);
  CHECK(m.action(2).pow(5) == FpMatrix::identity(5, 5));

  const auto rs = build_root_system(RootKind::C, 2);
  const Algebra a(rs, 3);
  const InvForm form(a);
  const auto chi = Functional::from_element(form, a.e(rs.highest_root()));
  const auto v = baby_verma(a, chi, {0, 0});
  CHECK(v.dim() == 81);
  const auto low = rs.negative(rs.highest_root());
  CHECK(v.action(a.root_basis(low)).pow(3) == FpMatrix::identity(81, 3));

  CHECK_THROWS_AS(baby_verma(a, Functional::from_element(form, a.e(low)), {0, 0}), PreconditionError);
  CHECK_THROWS_AS(baby_verma(a, chi, {0}), PreconditionError);
}

TEST_CASE("freeness test") {
  const Algebra a(build_root_system(RootKind::A, 1), 3);
  const auto blk = single_block(3);
  const auto r = freeness_test(a, blk, a.basis(1));
  CHECK(r.free);
  CHECK(r.profile.blocks == std::vector<std::size_t>{0, 0, 1});
  CHECK_FALSE(freeness_test(a, blk, a.zero()).free);
  CHECK(support_point(a, blk, a.zero()));
  CHECK_FALSE(support_point(a, blk, a.h(0)));
  CHECK_THROWS_AS(freeness_test(a, blk, a.h(0)), UnsupportedError);

  const auto rs = build_root_system(RootKind::C, 2);
  const Algebra c2(rs, 3);
  const InvForm form(c2);
  const auto v = baby_verma(c2, Functional::from_element(form, c2.e(rs.highest_root())), {0, 0});
  const auto named = type_c_roots(rs);
  const auto fr = freeness_test(c2, v, c2.e(named.gamma));
  CHECK(fr.free);
  CHECK(fr.rank_top == 27);
  CHECK(rank(v.action(c2.root_basis(named.gamma)).pow(2)) == 27);
  // invariance under scaling z
  CHECK(freeness_test(c2, v, c2.e(named.gamma).scaled(2)).free);

  const auto inv = invertibility_implies_freeness_check(c2, v, c2.e(named.beta), c2.e(named.gamma), c2.e(named.gamma));
  CHECK(inv.status == CheckStatus::pass);
  const auto v0 = baby_verma(c2, Functional::zero(c2), {0, 0});
  CHECK(invertibility_implies_freeness_check(c2, v0, c2.e(named.beta), c2.e(named.gamma), c2.e(named.gamma)).status ==
        CheckStatus::not_applicable);
}

TEST_CASE("nullcone enumeration") {
  const Algebra a(build_root_system(RootKind::A, 1), 3);
  const auto z = nullcone_enumerate(a, {});
  CHECK(z.mode == "exhaustive");
  CHECK(z.points.size() == 9);
  CHECK(z.candidates == 27);

  const Algebra c3(build_root_system(RootKind::C, 3), 2);
  CHECK_THROWS_AS(nullcone_enumerate(c3, {}), ResourceError);
  NullconeOptions opt;
  opt.allow_sampling = true;
  opt.samples = 200;
  opt.seed = 17;
  const auto s1 = nullcone_enumerate(c3, opt);
  const auto s2 = nullcone_enumerate(c3, opt);
  CHECK(s1.mode == "sampled");
  CHECK(s1.points.size() == 200);
  CHECK(s1.points == s2.points);
  for (const auto& x : s1.points) CHECK(c3.p_power(x).is_zero());
}

TEST_CASE("support variety inclusion on sl2") {
  for (Residue p : {3u, 5u})
    for (Residue c : {0u, 1u}) {
      const Algebra a(build_root_system(RootKind::A, 1), p);
      const auto z = nullcone_enumerate(a, {});
      for (Residue lam = 0; lam < p; ++lam) {
        const auto m = baby_verma(a, chi_f(a, c), {lam});
        const auto rep = support_inclusion_check(a, m, z);
        CHECK(rep.ok());
        CHECK(rep.nullcone_points == p * p);
      }
    }
}

TEST_CASE("eigenvalue check") {
  const auto rs = build_root_system(RootKind::C, 2);
  const Algebra a(rs, 3);
  const InvForm form(a);
  const auto v = baby_verma(a, Functional::from_element(form, a.e(rs.highest_root())), {0, 0});
  const auto named = type_c_roots(rs);
  const auto low = a.e(rs.negative(rs.highest_root()));
  const auto r = eigenvalue_check(a, v, low + a.e(named.gamma));
  CHECK(r.single_eigenvalue);
  CHECK(r.chi_z != 0);
  const auto g = eigenvalue_check(a, v, a.e(named.gamma));
  CHECK(g.single_eigenvalue);
  CHECK(g.chi_z == 0);
  CHECK_THROWS_AS(eigenvalue_check(a, v, a.h(0)), PreconditionError);
}

TEST_CASE("p = 2 identities on C2") {
  const Algebra a(build_root_system(RootKind::C, 2), 2);
  const InvForm form(a);
  const auto z = nullcone_enumerate(a, {});
  const auto cone = enumerate_cone(a);
  const auto rep = p2_identity_check(a, form, z, cone);
  CHECK(rep.ad_square_failures == 0);
  CHECK(rep.p_power_failures == 0);
}

TEST_CASE("rep text round trip") {
  const Algebra a(build_root_system(RootKind::A, 1), 5);
  const auto m = baby_verma(a, chi_f(a, 1), {3});
  std::stringstream ss;
  write_rep(ss, m);
  const auto back = read_rep(ss);
  CHECK(back.dim() == m.dim());
  CHECK(back.actions() == m.actions());
  CHECK(back.chi().values() == m.chi().values());
  std::stringstream bad("nonsense");
  CHECK_THROWS_AS(read_rep(bad), UsageError);
}
