#include "cycpres/simd/accumulate.hpp"

#include <atomic>

namespace cycpres::simd {

namespace {

bool cpu_has_avx2() {
#if defined(CYCPRES_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<AccumulateFn>& active_kernel() {
  static std::atomic<AccumulateFn> fn{kernel_for(detected_level())};
  return fn;
}

} // namespace

bool level_available(Level level) {
  switch (level) {
  case Level::Scalar:
    return true;
  case Level::Avx2:
    return cpu_has_avx2();
  }
  return false;
}

Level detected_level() { return level_available(Level::Avx2) ? Level::Avx2 : Level::Scalar; }

AccumulateFn kernel_for(Level level) {
#if defined(CYCPRES_HAVE_AVX2)
  if (level == Level::Avx2 && cpu_has_avx2()) return &accumulate_terms_avx2;
#endif
  (void)level;
  return &accumulate_terms_scalar;
}

Level active_level() {
  return active_kernel().load(std::memory_order_relaxed) == &accumulate_terms_scalar
             ? Level::Scalar
             : Level::Avx2;
}

bool set_level(Level level) {
  if (!level_available(level)) return false;
  active_kernel().store(kernel_for(level), std::memory_order_relaxed);
  return true;
}

std::string_view level_name(Level level) {
  return level == Level::Avx2 ? "avx2" : "scalar";
}

void accumulate_terms(std::span<const SparseTerm> terms, const std::uint32_t* table,
                      std::size_t n, std::int64_t* acc) {
  active_kernel().load(std::memory_order_relaxed)(terms, table, n, acc);
}

} // namespace cycpres::simd
