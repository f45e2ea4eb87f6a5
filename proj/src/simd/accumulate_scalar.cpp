#include "cycpres/simd/accumulate.hpp"

namespace cycpres::simd {

void accumulate_terms_scalar(std::span<const SparseTerm> terms, const std::uint32_t* table,
                             std::size_t n, std::int64_t* acc) {
  for (const auto& t : terms) {
    const std::uint32_t* row = table + static_cast<std::size_t>(t.exponent) * n;
    const std::int64_t c = t.coeff;
    for (std::size_t i = 0; i < n; ++i) acc[i] += c * static_cast<std::int64_t>(row[i]);
  }
}

} // namespace cycpres::simd
