#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cycpres/errors.hpp"
#include "cycpres/exact_linear.hpp"
#include "cycpres/poly.hpp"
#include "oracles.hpp"

using namespace cycpres;

namespace {

IntMatrix to_matrix(const oracle::Mat& m) {
  IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = m[i][j];
  return out;
}

oracle::Mat random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  oracle::Mat m(n, std::vector<mpz_class>(n));
  for (auto& row : m)
    for (auto& v : row) v = dist(rng);
  return m;
}

std::vector<Integer> as_integers(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("det on small examples") {
  CHECK(det(IntMatrix::identity(4)) == 1);
  CHECK(det(IntMatrix{{1, 1}, {1, 1}}) == 0);
  CHECK(det(IntMatrix{{2, 1}, {1, 2}}) == 3);
  CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(IntMatrix{}) == 1);
}

TEST_CASE("det rejects non-square input") {
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("Bareiss agrees with cofactor expansion up to 5x5") {
  std::mt19937_64 rng(20261018);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto m = random_matrix(rng, n, -9, 9);
      REQUIRE(det(to_matrix(m)) == oracle::cofactor_det(m));
    }
  }
}

TEST_CASE("Bareiss handles zero pivots and singular blocks") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(rng, 5, -2, 2);
    m[0][0] = 0;
    if (trial % 3 == 0) m[4] = m[1];
    REQUIRE(det(to_matrix(m)) == oracle::cofactor_det(m));
  }
}

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix::identity(3)).invariant_factors == as_integers({1, 1, 1}));
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariant_factors == as_integers({1, 6}));
  // Exponent sums of the Fibonacci word x0 x1 X2 over n = 5.
  const auto fib = oracle::circulant({1, 1, -1, 0, 0});
  REQUIRE(oracle::determinantal_snf(fib) == as_integers({1, 1, 1, 1, 11}));
  CHECK(smith_normal_form(to_matrix(fib)).invariant_factors == as_integers({1, 1, 1, 1, 11}));
  CHECK(smith_normal_form(IntMatrix(2, 2)).invariant_factors == as_integers({0, 0}));
  CHECK(smith_normal_form(IntMatrix{{1, 1}, {1, 1}}).invariant_factors == as_integers({1, 0}));
}

TEST_CASE("Smith normal form matches determinantal divisors") {
  std::mt19937_64 rng(99);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 150; ++trial) {
      const auto m = random_matrix(rng, n, -6, 6);
      REQUIRE(smith_normal_form(to_matrix(m)).invariant_factors == oracle::determinantal_snf(m));
    }
  }
  // Rectangular input.
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<long> dist(-5, 5);
    oracle::Mat m(2, std::vector<mpz_class>(4));
    for (auto& row : m)
      for (auto& v : row) v = dist(rng);
    REQUIRE(smith_normal_form(to_matrix(m)).invariant_factors == oracle::determinantal_snf(m));
  }
}

TEST_CASE("Smith normal form properties") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 6;
    IntMatrix m = to_matrix(random_matrix(rng, n, -7, 7));
    const SmithForm s = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
      const Integer& a = s.invariant_factors[i];
      const Integer& b = s.invariant_factors[i + 1];
      if (a == 0) REQUIRE(b == 0);
      else REQUIRE(mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()));
    }
    const Integer d = det(m);
    if (d != 0) REQUIRE(s.nonzero_product() == abs(d));
    else REQUIRE(s.rank() < n);

    REQUIRE(smith_normal_form(m.transposed()) == s);
    IntMatrix permuted = m;
    permuted.swap_rows(0, n - 1);
    permuted.swap_cols(0, n / 2);
    REQUIRE(smith_normal_form(permuted) == s);
  }
}

TEST_CASE("sylvester matrix") {
  const IntMatrix s = sylvester(IntPoly{-2, 1}, IntPoly{-3, 1});
  CHECK(s.rows() == 2);
  // Res(t - 2, t - 3) = g(2) = -1.
  CHECK(det(s) == -1);
  CHECK(det(sylvester(IntPoly{0, 1}, IntPoly{0, 1})) == 0);
  CHECK(abs(det(sylvester(cyclotomic(5), IntPoly{1, 1, 0, -1}))) == 1);
  CHECK_THROWS_AS(sylvester(IntPoly{}, IntPoly{1, 1}), UndefinedResultantError);
}
