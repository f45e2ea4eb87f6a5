#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <random>

#include "cycpres/circulant_mod.hpp"
#include "cycpres/cyclic_words.hpp"
#include "cycpres/exact_linear.hpp"
#include "cycpres/simd/accumulate.hpp"

using namespace cycpres;

namespace {

// Restores the dispatched kernel on scope exit.
struct LevelGuard {
  simd::Level saved = simd::active_level();
  ~LevelGuard() { simd::set_level(saved); }
};

} // namespace

TEST_CASE("dispatch reports a usable level") {
  CHECK(simd::level_available(simd::Level::Scalar));
  CHECK(simd::level_available(simd::detected_level()));
  LevelGuard guard;
  CHECK(simd::set_level(simd::Level::Scalar));
  CHECK(simd::active_level() == simd::Level::Scalar);
  MESSAGE("detected SIMD level: " << simd::level_name(simd::detected_level()));
}

TEST_CASE("vector kernels match the scalar kernel bit for bit") {
  std::mt19937_64 rng(123);
  for (auto level : {simd::Level::Scalar, simd::Level::Avx2}) {
    if (!simd::level_available(level)) continue;
    const simd::AccumulateFn kernel = simd::kernel_for(level);
    for (std::size_t n = 1; n <= 67; ++n) {
      std::uniform_int_distribution<std::uint32_t> entry(0, (1u << 31) - 2);
      std::vector<std::uint32_t> table(n * n);
      for (auto& v : table) v = entry(rng);
      std::uniform_int_distribution<std::int32_t> coeff(-100000, 100000);
      std::uniform_int_distribution<std::uint32_t> expo(0, static_cast<std::uint32_t>(n - 1));
      std::vector<simd::SparseTerm> terms(1 + n % 9);
      for (auto& t : terms) t = {expo(rng), coeff(rng)};
      std::vector<std::int64_t> base(n), fast(n);
      for (std::size_t i = 0; i < n; ++i) base[i] = fast[i] = static_cast<std::int64_t>(i) - 7;
      simd::accumulate_terms_scalar(terms, table.data(), n, base.data());
      kernel(terms, table.data(), n, fast.data());
      REQUIRE(base == fast);
    }
  }
}

TEST_CASE("extreme coefficients stay exact") {
  const std::size_t n = 13;
  std::vector<std::uint32_t> table(n * n, (1u << 31) - 1);
  std::vector<simd::SparseTerm> terms{{0, std::numeric_limits<std::int32_t>::min()},
                                      {5, std::numeric_limits<std::int32_t>::max()},
                                      {12, -1}};
  for (auto level : {simd::Level::Scalar, simd::Level::Avx2}) {
    if (!simd::level_available(level)) continue;
    std::vector<std::int64_t> acc(n, 0);
    simd::kernel_for(level)(terms, table.data(), n, acc.data());
    for (auto v : acc) REQUIRE(v == -2 * static_cast<std::int64_t>((1u << 31) - 1));
  }
}

TEST_CASE("primes and roots") {
  CHECK(is_prime_u32(2));
  CHECK(is_prime_u32(2147483647u));
  CHECK_FALSE(is_prime_u32(2147483649u));
  CHECK_FALSE(is_prime_u32(3215031751u));  // strong pseudoprime to bases 2, 3, 5, 7
  for (std::int64_t n : {1, 2, 5, 12, 35, 60}) {
    const auto& ctx = circulant_modular(n);
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& pr = ctx.prime(i);
      REQUIRE(is_prime_u32(pr.p));
      REQUIRE(pr.p % static_cast<std::uint32_t>(n) == 1 % static_cast<std::uint32_t>(n));
      REQUIRE(pr.p > (1u << 30));
      if (i) REQUIRE(pr.p < ctx.prime(i - 1).p);
    }
  }
}

TEST_CASE("multimodular determinant equals Bareiss on every level") {
  LevelGuard guard;
  std::mt19937_64 rng(321);
  for (auto level : {simd::Level::Scalar, simd::Level::Avx2}) {
    if (!simd::set_level(level)) continue;
    for (std::int64_t n = 1; n <= 24; ++n) {
      for (int trial = 0; trial < 12; ++trial) {
        const long span = trial % 3 == 0 ? 40 : 3;
        std::uniform_int_distribution<long> coef(-span, span);
        std::vector<std::int64_t> c(static_cast<std::size_t>(n));
        for (auto& v : c) v = coef(rng);
        const Integer exact = det(circulant_of(c));
        REQUIRE(circulant_det(c) == exact);
        REQUIRE(circulant_is_unimodular(c) == (abs(exact) == 1));
      }
    }
  }
}

TEST_CASE("unimodular circulants are recognized with either sign") {
  // circ(-1, 0, 0) = -I and a monomial shift have det -1 or +1.
  CHECK(circulant_is_unimodular(std::vector<std::int64_t>{-1, 0, 0}));
  CHECK(circulant_det(std::vector<std::int64_t>{-1, 0, 0}) == -1);
  CHECK(circulant_is_unimodular(std::vector<std::int64_t>{0, 1, 0, 0}));
  CHECK(circulant_det(std::vector<std::int64_t>{0, 1, 0, 0}) == det(circulant_of({0, 1, 0, 0})));
  CHECK_FALSE(circulant_is_unimodular(std::vector<std::int64_t>{0, 0, 0}));
  CHECK(circulant_det(std::vector<std::int64_t>{0, 0}) == 0);
  CHECK(circulant_det(std::vector<std::int64_t>{7}) == 7);
}

TEST_CASE("huge coefficients fall back to Bareiss") {
  std::vector<std::int64_t> c{std::int64_t{1} << 40, 3, -5};
  CHECK(circulant_det(c) == det(circulant_of(c)));
}
