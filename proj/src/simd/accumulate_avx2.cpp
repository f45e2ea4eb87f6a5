#include "cycpres/simd/accumulate.hpp"

#include <immintrin.h>

namespace cycpres::simd {

void accumulate_terms_avx2(std::span<const SparseTerm> terms, const std::uint32_t* table,
                           std::size_t n, std::int64_t* acc) {
  const std::size_t body = n & ~std::size_t{3};
  for (const auto& t : terms) {
    const std::uint32_t* row = table + static_cast<std::size_t>(t.exponent) * n;
    // _mm256_mul_epi32 reads the low signed 32 bits of each lane; table
    // entries are below 2^31 so zero extension keeps them non-negative.
    const __m256i coeff = _mm256_set1_epi64x(t.coeff);
    std::size_t i = 0;
    for (; i < body; i += 4) {
      const __m128i raw = _mm_loadu_si128(reinterpret_cast<const __m128i*>(row + i));
      const __m256i wide = _mm256_cvtepu32_epi64(raw);
      __m256i sum = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
      sum = _mm256_add_epi64(sum, _mm256_mul_epi32(wide, coeff));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), sum);
    }
    const std::int64_t c = t.coeff;
    for (; i < n; ++i) acc[i] += c * static_cast<std::int64_t>(row[i]);
  }
}

} // namespace cycpres::simd
