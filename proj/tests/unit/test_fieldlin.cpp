#include <random>

#include "doctest.h"
#include "liecheck/fieldlin.hpp"
#include "oracles.hpp"

using namespace liecheck;

namespace {

FpMatrix to_fp(const oracle::Mat& m, Residue p) { return FpMatrix::from_rows(m, p); }

}  // namespace

TEST_CASE("ff_inv small values") {
  CHECK(ff_inv(FpScalar(1, 5)).value() == 1);
  CHECK(ff_inv(FpScalar(2, 5)).value() == 3);
  for (int a = 1; a < 7; ++a) CHECK((FpScalar(a, 7) * ff_inv(FpScalar(a, 7))).value() == 1);
  CHECK_THROWS_AS(ff_inv(FpScalar(0, 7)), DivisionByZero);
}

TEST_CASE("inverses up to 101") {
  for (Residue p = 2; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    for (Residue a = 1; a < p; ++a) REQUIRE((FpScalar(a, p) * ff_inv(FpScalar(a, p))).value() == 1);
  }
}

TEST_CASE("scalar construction and moduli") {
  CHECK_THROWS_AS(FpScalar(1, 4), PreconditionError);
  CHECK(FpScalar(-1, 5).value() == 4);
  CHECK_THROWS_AS(FpScalar(1, 5) + FpScalar(1, 7), ModulusMismatch);
  CHECK((FpScalar(3, 7).pow(6)).value() == 1);
}

TEST_CASE("rank basics") {
  CHECK(rank(FpMatrix(4, 6, 5)) == 0);
  CHECK(rank(FpMatrix::identity(7, 3)) == 7);
}

TEST_CASE("rank agrees with an independent elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Residue p = trial % 3 == 0 ? 2 : trial % 3 == 1 ? 5 : 3;
    auto m = oracle::random_matrix(20, 20, p, rng);
    // force some dependencies
    if (trial % 2) {
      for (std::size_t j = 0; j < 20; ++j) m[19][j] = (m[0][j] + 2 * m[1][j]) % p;
      for (std::size_t j = 0; j < 20; ++j) m[18][j] = m[3][j];
    }
    const auto fm = to_fp(m, p);
    CHECK(rank(fm) == oracle::rank(m, p));
    CHECK(rank(fm) == rank(fm.transpose()));
  }
}

TEST_CASE("solve") {
  std::mt19937_64 rng(5);
  const auto id = FpMatrix::identity(4, 7);
  std::vector<Residue> b{1, 2, 3, 6};
  CHECK(*solve(id, b) == b);

  auto inc = FpMatrix::from_rows({{1, 1}, {1, 1}}, 3);
  std::vector<Residue> bad{1, 2};
  CHECK_FALSE(solve(inc, bad).has_value());

  for (int trial = 0; trial < 20; ++trial) {
    auto m = oracle::random_matrix(6, 9, 3, rng);
    const auto a = to_fp(m, 3);
    std::vector<Residue> x0(9);
    for (auto& v : x0) v = static_cast<Residue>(rng() % 3);
    const auto rhs = a.apply(x0);
    auto x = solve(a, rhs);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == rhs);
  }
  CHECK_THROWS_AS(solve(id, std::vector<Residue>{1, 2}), DimensionMismatch);
}

TEST_CASE("nullspace and inverse") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = oracle::random_matrix(5, 8, 5, rng);
    const auto a = to_fp(m, 5);
    const auto ns = nullspace(a);
    CHECK(ns.rows() + rank(a) == 8);
    for (std::size_t r = 0; r < ns.rows(); ++r) {
      const auto img = a.apply(ns.row(r));
      for (auto v : img) CHECK(v == 0);
    }
    auto sq = to_fp(oracle::random_matrix(6, 6, 5, rng), 5);
    if (auto inv = inverse(sq)) CHECK(sq * *inv == FpMatrix::identity(6, 5));
    else CHECK(rank(sq) < 6);
  }
}

TEST_CASE("matrix power matches repeated multiplication") {
  std::mt19937_64 rng(3);
  auto m = oracle::random_matrix(5, 5, 7, rng);
  CHECK(to_fp(m, 7).pow(7) == to_fp(oracle::power(m, 7, 7), 7));
  CHECK(to_fp(m, 7).pow(0) == FpMatrix::identity(5, 7));
}

TEST_CASE("echelon basis") {
  EchelonBasis eb(3, 5);
  CHECK(eb.insert(std::vector<Residue>{1, 2, 0}));
  CHECK_FALSE(eb.insert(std::vector<Residue>{2, 4, 0}));
  CHECK(eb.contains(std::vector<Residue>{3, 1, 0}));
  CHECK_FALSE(eb.contains(std::vector<Residue>{0, 0, 1}));
  CHECK(eb.dim() == 1);
}
