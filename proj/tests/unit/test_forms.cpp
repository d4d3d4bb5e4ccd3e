#include <random>

#include "doctest.h"
#include "liecheck/forms.hpp"
#include "liecheck/longroots.hpp"

using namespace liecheck;

namespace {

GVec random_element(const Algebra& a, std::mt19937_64& rng) {
  GVec v = a.zero();
  for (std::size_t i = 0; i < a.dim(); ++i) v.set(i, static_cast<Residue>(rng() % a.p()));
  return v;
}

}  // namespace

TEST_CASE("form normalization, invariance and radical") {
  const std::pair<RootKind, int> cases[] = {{RootKind::A, 2}, {RootKind::B, 3}, {RootKind::C, 2}, {RootKind::G, 2},
                                            {RootKind::F, 4}};
  for (const auto& [k, l] : cases)
    for (Residue p : {2u, 3u, 5u, 7u}) {
      CAPTURE(kind_letter(k));
      CAPTURE(p);
      const Algebra a(build_root_system(k, l), p);
      const InvForm form(a);
      const auto top = a.root_system().highest_root();
      CHECK(form(a.e(top), a.e(a.root_system().negative(top))) == 1);
      CHECK(form.gram() == form.gram().transpose());
      bool ok = true;
      for (std::size_t x = 0; x < a.dim() && ok; ++x)
        for (std::size_t y = 0; y < a.dim() && ok; ++y)
          for (std::size_t z = 0; z < a.dim() && ok; ++z) {
            const auto bx = a.basis(x), by = a.basis(y), bz = a.basis(z);
            ok = a.field().add(form(a.bracket(bx, by), bz), form(by, a.bracket(bx, bz))) == 0;
          }
      CHECK(ok);
      for (const auto& r : form.radical())
        for (std::size_t i = 0; i < a.dim(); ++i) CHECK(form(r, a.basis(i)) == 0);
    }
}

TEST_CASE("form examples in type C") {
  const Algebra a(build_root_system(RootKind::C, 2), 5);
  const InvForm form(a);
  const auto top = a.e(a.root_system().highest_root());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto r = a.basis_root(i);
    if (!r || a.root_system().is_positive(*r)) CHECK(form(top, a.basis(i)) == 0);
  }
  CHECK(InvForm(Algebra(build_root_system(RootKind::C, 2), 3)).nondegenerate());
  CHECK_FALSE(InvForm(Algebra(build_root_system(RootKind::C, 2), 2)).nondegenerate());
}

TEST_CASE("form is preserved by adexp") {
  std::mt19937_64 rng(4);
  const Algebra a(build_root_system(RootKind::C, 2), 5);
  const InvForm form(a);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_element(a, rng), y = random_element(a, rng);
    const std::size_t r = rng() % a.root_system().size();
    const Residue t = static_cast<Residue>(rng() % 5);
    CHECK(form(a.adexp(r, t, x), a.adexp(r, t, y)) == form(x, y));
  }
}

TEST_CASE("b_f symmetry, homogeneity and equivariance") {
  std::mt19937_64 rng(8);
  const Algebra a(build_root_system(RootKind::C, 2), 7);
  const InvForm form(a);
  const auto& F = a.field();
  for (int trial = 0; trial < 40; ++trial) {
    const auto u = random_element(a, rng), x = random_element(a, rng), y = random_element(a, rng);
    const auto f = Functional::from_element(form, u);
    const Residue b = b_form(a, form, f, x, y);
    CHECK(b == b_form(a, form, f, y, x));
    const Residue s = static_cast<Residue>(rng() % 7), t = static_cast<Residue>(rng() % 7);
    CHECK(b_form(a, form, f, x.scaled(s), y.scaled(t)) == F.mul(F.mul(F.mul(s, s), F.mul(t, t)), b));
    // b_f(phi x, phi y) = b_{f o phi}(x, y)
    const std::size_t r = rng() % a.root_system().size();
    const Residue c = static_cast<Residue>(rng() % 7);
    std::vector<Residue> pulled(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) pulled[i] = f(a.adexp(r, c, a.basis(i)));
    const Functional g(pulled, 7);
    CHECK(b_form(a, form, f, a.adexp(r, c, x), a.adexp(r, c, y)) == b_form(a, form, g, x, y));
    CHECK(b_form(a, form, f, x, x) == F.mul(F.mul(4, F.mul(f(x), f(x))), form(x, x)));
  }
}

TEST_CASE("coadjoint centralizers") {
  const Algebra a(build_root_system(RootKind::C, 2), 3);
  const InvForm form(a);
  CHECK(coadjoint_centralizer(a, Functional::zero(a)).size() == a.dim());
  const auto top = a.e(a.root_system().highest_root());
  const auto z = coadjoint_centralizer(a, Functional::from_element(form, top));
  CHECK(z.size() == 6);
  // cross-check: with a nondegenerate form this is the centralizer of e_top
  CHECK(z.size() == a.dim() - rank(a.ad(top)));

  const Algebra sl2(build_root_system(RootKind::A, 1), 5);
  const InvForm f2(sl2);
  const auto zh = coadjoint_centralizer(sl2, Functional::from_element(f2, sl2.h(0)));
  REQUIRE(zh.size() == 1);
  CHECK(zh[0][1] == 0);
  CHECK(zh[0][2] == 0);
}

TEST_CASE("witness search for f([x, e]) != 0") {
  const auto rs = build_root_system(RootKind::C, 2);
  const Algebra a(rs, 5);
  const InvForm form(a);
  const auto cone = enumerate_cone(a);
  const auto top = a.e(rs.highest_root());
  // regular semisimple h = h_1 + 3 h_2 has nonzero pairing with every root
  GVec h = a.h(0) + a.h(1).scaled(3);
  for (std::size_t r = 0; r < rs.size(); ++r) {
    CHECK(a.bracket(h, a.e(r)) != a.zero());
  }
  const auto f = Functional::from_element(form, h);
  const auto res = find_witness_e(a, form, f, top, cone.points());
  REQUIRE(res.status == WitnessStatus::found);
  CHECK(f(*res.witness) == 0);
  CHECK(f(a.bracket(top, *res.witness)) != 0);
  CHECK(cone.contains(*res.witness));

  CHECK_THROWS_AS(find_witness_e(a, form, Functional::zero(a), top, cone.points()), PreconditionError);
  CHECK_THROWS_AS(find_witness_e(a, form, Functional::from_element(form, top), a.e(rs.negative(rs.highest_root())),
                                 cone.points()),
                  PreconditionError);
  CHECK_THROWS_AS(find_witness_e(a, form, f, h, cone.points()), PreconditionError);
  CHECK(*next_escalation_prime(5) == 7);
  CHECK_FALSE(next_escalation_prime(13).has_value());
}
