#include <set>

#include "doctest.h"
#include "liecheck/rootsys.hpp"

using namespace liecheck;

namespace {

struct Case {
  RootKind kind;
  int rank;
};

const Case kAll[] = {{RootKind::A, 1}, {RootKind::A, 2}, {RootKind::A, 5}, {RootKind::B, 2}, {RootKind::B, 3},
                     {RootKind::B, 6}, {RootKind::C, 2}, {RootKind::C, 3}, {RootKind::C, 8}, {RootKind::D, 4},
                     {RootKind::D, 7}, {RootKind::E, 6}, {RootKind::E, 7}, {RootKind::E, 8}, {RootKind::F, 4},
                     {RootKind::G, 2}};

}  // namespace

TEST_CASE("named examples") {
  const auto c2 = build_root_system(RootKind::C, 2);
  CHECK(c2.size() == 8);
  CHECK(c2.root(c2.highest_root()).coords == Weight{2, 0});

  const auto a2 = build_root_system(RootKind::A, 2);
  CHECK(a2.size() == 6);
  CHECK(a2.count_long() == 6);

  const auto g2 = build_root_system(RootKind::G, 2);
  CHECK(g2.size() == 12);
  CHECK(g2.count_long() == 6);

  CHECK_THROWS_AS(build_root_system(RootKind::D, 2), PreconditionError);
  CHECK_THROWS_AS(build_root_system(RootKind::F, 5), PreconditionError);
  CHECK_THROWS_AS(parse_root_kind("Q"), UsageError);
}

TEST_CASE("counts and root-system properties for every supported type") {
  for (const auto& c : kAll) {
    CAPTURE(c.rank);
    CAPTURE(kind_letter(c.kind));
    const auto rs = build_root_system(c.kind, c.rank);
    CHECK(rs.size() == expected_root_count(c.kind, c.rank));
    CHECK(rs.count_long() == expected_long_root_count(c.kind, c.rank));
    const auto top = rs.highest_root();
    CHECK(rs.root(top).length == LengthClass::long_root);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      CHECK(rs.pairing(i, i) == 2);
      const int w = rs.pairing(i, top);
      CHECK(w >= -2);
      CHECK(w <= 2);
      if (rs.is_positive(i)) CHECK(rs.root(i).height <= rs.root(top).height);
      CHECK(rs.root(rs.negative(i)).coords == [&] {
        auto v = rs.root(i).coords;
        for (auto& x : v) x = -x;
        return v;
      }());
    }
    // positive roots sorted by height
    for (std::size_t i = 1; i < rs.num_positive(); ++i) CHECK(rs.root(i - 1).height <= rs.root(i).height);
    // Cartan matrix diagonal
    for (std::size_t i = 0; i < rs.simple_roots().size(); ++i) CHECK(rs.cartan_matrix()[i][i] == 2);
  }
}

TEST_CASE("type C pairings used by the limit argument") {
  for (int l : {2, 3}) {
    const auto rs = build_root_system(RootKind::C, l);
    const auto named = type_c_roots(rs);
    Weight m2e2(static_cast<std::size_t>(l), 0);
    m2e2[1] = -2;
    CHECK(rs.pairing(rs.root(named.gamma).coords, m2e2) == 1);
    const auto r2 = special_set_R2minus(rs);
    std::set<std::size_t> excluded(r2.begin(), r2.end());
    excluded.insert(named.gamma);
    for (std::size_t d = 0; d < rs.size(); ++d) {
      if (excluded.count(d)) continue;
      const int w = rs.pairing(rs.root(d).coords, m2e2);
      CHECK(w >= -2);
      CHECK(w <= 0);
    }
  }
}

TEST_CASE("R2 minus") {
  const auto c2 = build_root_system(RootKind::C, 2);
  auto s2 = special_set_R2minus(c2);
  REQUIRE(s2.size() == 2);
  CHECK(c2.root(s2[0]).coords == Weight{0, -2});
  CHECK(c2.root(s2[1]).coords == Weight{1, -1});

  const auto c3 = build_root_system(RootKind::C, 3);
  std::set<Weight> got;
  for (auto i : special_set_R2minus(c3)) got.insert(c3.root(i).coords);
  CHECK(got == std::set<Weight>{{0, -2, 0}, {1, -1, 0}, {0, -1, 1}, {0, -1, -1}});
  for (int l = 2; l <= 6; ++l)
    CHECK(special_set_R2minus(build_root_system(RootKind::C, l)).size() == static_cast<std::size_t>(2 * l - 2));
  CHECK_THROWS_AS(special_set_R2minus(build_root_system(RootKind::B, 3)), PreconditionError);
}

TEST_CASE("highest root neighbours") {
  const auto b3 = build_root_system(RootKind::B, 3);
  const auto n = highest_root_neighbour(b3);
  CHECK(b3.root(n).coords == Weight{0, 1, -1});
  const auto f4 = build_root_system(RootKind::F, 4);
  CHECK(highest_root_neighbour(f4) == f4.simple_roots()[0]);
}

TEST_CASE("pairing errors") {
  const auto c2 = build_root_system(RootKind::C, 2);
  CHECK_THROWS_AS(c2.pairing(Weight{1, 0}, Weight{0, 0}), PreconditionError);
}
