#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "cycpres/integer.hpp"
#include "cycpres/simd/accumulate.hpp"

namespace cycpres {

// Exact determinants of n x n integer circulants via their eigenvalues modulo
// primes p = 1 (mod n): det circ(c) = prod_i f_c(w^i) with w of order n in F_p.
// Residues are recombined by CRT once the product of primes exceeds twice
// the Hadamard bound (sum c_j^2)^{n/2}, so the result is exact.
//
// Instances are shared across threads; primes are appended lazily under a
// mutex into storage that never reallocates.
class CirculantModular {
public:
  struct Prime {
    std::uint32_t p;
    std::uint32_t root;               // element of exact order n
    std::vector<std::uint32_t> table; // table[e * n + i] = root^{e*i} mod p
  };

  static constexpr std::size_t kMaxPrimes = 256;

  explicit CirculantModular(std::int64_t n);

  std::int64_t size() const noexcept { return n_; }

  /// det circ_n(c); requires c.size() == n. Falls back to Bareiss
  /// elimination when the coefficients are too large for the kernels.
  Integer determinant(std::span<const std::int64_t> c) const;

  /// |det circ_n(c)| == 1, with early exit on the first residue outside {1, p-1}.
  bool is_unimodular(std::span<const std::int64_t> c) const;

  /// det circ_n(c) mod the i-th prime.
  std::uint32_t residue(std::span<const std::int64_t> c, std::size_t prime_index) const;

  const Prime& prime(std::size_t index) const;

private:
  struct Terms {
    std::vector<simd::SparseTerm> terms;
    double log2_sum_squares = 0;
    bool kernel_safe = true;
    bool zero = true;
  };

  Terms prepare(std::span<const std::int64_t> c) const;
  std::uint32_t residue_for(const Terms& t, const Prime& pr) const;
  std::size_t primes_needed(const Terms& t) const;

  std::int64_t n_;
  mutable std::mutex grow_mutex_;
  mutable std::vector<std::unique_ptr<Prime>> primes_;
  mutable std::atomic<std::size_t> ready_{0};
};

/// Process-wide instance for circulants of size n.
const CirculantModular& circulant_modular(std::int64_t n);

/// Convenience wrappers over circulant_modular(c.size()).
Integer circulant_det(std::span<const std::int64_t> c);
bool circulant_is_unimodular(std::span<const std::int64_t> c);

/// Deterministic primality test for 32-bit values.
bool is_prime_u32(std::uint32_t v);

} // namespace cycpres
