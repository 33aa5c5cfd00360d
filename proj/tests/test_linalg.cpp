#include <doctest.h>

#include "oracles.hpp"
#include "quademb/error.hpp"
#include "quademb/linalg.hpp"
#include "quademb/random.hpp"

using namespace quademb;

namespace {

ScalarMatrix random_matrix(Rng& rng, const Ring& ring, std::size_t rows, std::size_t cols, long lo, long hi) {
  ScalarMatrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(ring, rng.integer(lo, hi));
  return m;
}

oracle::QMatrix as_q(const ScalarMatrix& m) {
  oracle::QMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).value());
  return out;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  Rng rng(11);
  for (const auto& ring : {Ring::integers(), Ring::rationals(), Ring::integers_mod(12)}) {
    for (int k = 0; k < 40; ++k) {
      const std::size_t n = 1 + rng.index(5);
      const auto m = random_matrix(rng, ring, n, n, -5, 5);
      const Scalar expected(ring, oracle::cofactor_det(as_q(m)));
      CHECK(determinant(m) == expected);
    }
  }
}

TEST_CASE("integral solving is complete") {
  const Ring z = Ring::integers();
  const auto a = ScalarMatrix::from_rows(z, {{2, 4}, {6, 8}});
  CHECK_FALSE(solve_in_ring(a, {Scalar(z, 1L), Scalar(z, 0L)}).has_value());
  // (2, 4; 6, 8) (x, y) = (2, 2): x = -3, y = 2.
  auto x = solve_in_ring(a, {Scalar(z, 2L), Scalar(z, 2L)});
  REQUIRE(x);
  CHECK(a.apply(*x) == Coords{Scalar(z, 2L), Scalar(z, 2L)});
  // Solvable over Q but not over Z.
  const auto b = ScalarMatrix::from_rows(z, {{2}, {4}});
  CHECK_FALSE(solve_in_ring(b, {Scalar(z, 1L), Scalar(z, 2L)}).has_value());
  const auto bq = ScalarMatrix::from_rows(Ring::rationals(), {{2}, {4}});
  CHECK(solve_in_ring(bq, {Scalar(Ring::rationals(), 1L), Scalar(Ring::rationals(), 2L)}).has_value());

  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto m = random_matrix(rng, z, 1 + rng.index(5), 1 + rng.index(5), -4, 4);
    const auto sol = rng.integer_coords(z, m.cols(), -3, 3);
    const auto rhs = m.apply(sol);
    const auto got = solve_in_ring(m, rhs);
    REQUIRE(got);
    CHECK(m.apply(*got) == rhs);
  }
}

TEST_CASE("modular solving matches enumeration") {
  Rng rng(3);
  for (long mod : {4L, 6L, 9L}) {
    const Ring r = Ring::integers_mod(static_cast<std::uint32_t>(mod));
    for (int k = 0; k < 60; ++k) {
      const std::size_t rows = 1 + rng.index(3), cols = 1 + rng.index(3);
      std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
      std::vector<long> b(rows);
      ScalarMatrix m(r, rows, cols);
      Coords rhs;
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          a[i][j] = rng.integer(0, mod - 1);
          m(i, j) = Scalar(r, a[i][j]);
        }
        b[i] = rng.integer(0, mod - 1);
        rhs.push_back(Scalar(r, b[i]));
      }
      const auto got = solve_in_ring(m, rhs);
      CHECK(got.has_value() == oracle::solvable_mod(a, b, mod));
      if (got) CHECK(m.apply(*got) == rhs);
    }
  }
}

TEST_CASE("rank and inverse") {
  Rng rng(8);
  const Ring q = Ring::rationals();
  for (int k = 0; k < 50; ++k) {
    const auto m = random_matrix(rng, q, 1 + rng.index(5), 1 + rng.index(5), -2, 2);
    CHECK(rank_over_fractions(m) == oracle::rank(as_q(m)));
  }
  CHECK_THROWS_AS(rank_over_fractions(ScalarMatrix::identity(Ring::integers_mod(5), 2)), UnsupportedRing);

  const Ring z = Ring::integers();
  const auto u = ScalarMatrix::from_rows(z, {{2, 1}, {1, 1}});
  const auto inv = inverse(u);
  REQUIRE(inv);
  CHECK(u * *inv == ScalarMatrix::identity(z, 2));
  CHECK_FALSE(inverse(ScalarMatrix::from_rows(z, {{2, 0}, {0, 1}})).has_value());
  CHECK(inverse(ScalarMatrix::from_rows(q, {{2, 0}, {0, 1}})).has_value());
}

TEST_CASE("row space bookkeeping") {
  FractionRowSpace s(3);
  CHECK(s.insert({1, 2, 3}));
  CHECK_FALSE(s.insert({2, 4, 6}));
  CHECK(s.contains({mpq_class(1, 2), 1, mpq_class(3, 2)}));
  CHECK(s.insert({0, 0, 1}));
  CHECK(s.rank() == 2);
}
