#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace cycpres::simd {

/// One nonzero coefficient of a circulant's first row.
struct SparseTerm {
  std::uint32_t exponent;
  std::int32_t coeff;
};

// acc[i] += sum_t coeff_t * table[exponent_t * n + i] for i in [0, n).
//
// table is the n x n matrix of residues w^{e*i} mod p (row-major, each entry
// < 2^31). Callers keep sum_t |coeff_t| below 2^32 so the int64 accumulators
// cannot overflow.
using AccumulateFn = void (*)(std::span<const SparseTerm> terms, const std::uint32_t* table,
                              std::size_t n, std::int64_t* acc);

void accumulate_terms_scalar(std::span<const SparseTerm> terms, const std::uint32_t* table,
                             std::size_t n, std::int64_t* acc);

#if defined(CYCPRES_HAVE_AVX2)
void accumulate_terms_avx2(std::span<const SparseTerm> terms, const std::uint32_t* table,
                           std::size_t n, std::int64_t* acc);
#endif

enum class Level { Scalar, Avx2 };

/// Best level supported by both the build and the running CPU.
Level detected_level();
/// Level currently used by accumulate_terms().
Level active_level();
/// Forces a level; returns false (and changes nothing) if it is unavailable.
bool set_level(Level level);
bool level_available(Level level);
std::string_view level_name(Level level);

AccumulateFn kernel_for(Level level);

/// Dispatches to the active kernel.
void accumulate_terms(std::span<const SparseTerm> terms, const std::uint32_t* table,
                      std::size_t n, std::int64_t* acc);

} // namespace cycpres::simd
