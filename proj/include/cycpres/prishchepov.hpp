#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cycpres/cyclic_words.hpp"
#include "cycpres/poly.hpp"

namespace cycpres {

/// Parameters (r, n, k, s, q) of the Prishchepov group P(r,n,k,s,q) with defining word
/// (x_0 x_q ... x_{(r-1)q}) (x_{k-1} x_{k-1+q} ... x_{k-1+(s-1)q})^{-1}.
/// k is kept as given; every congruence reduces modulo n when read.
struct PrishParams {
  std::int64_t r = 1;
  std::int64_t n = 2;
  std::int64_t k = 1;
  std::int64_t s = 1;
  std::int64_t q = 1;

  /// Throws DomainError unless n >= 2 and r, k, s, q >= 1.
  static PrishParams make(std::int64_t r, std::int64_t n, std::int64_t k, std::int64_t s,
                          std::int64_t q);

  /// "r,n,k,s,q"
  std::string key() const;

  friend bool operator==(const PrishParams&, const PrishParams&) = default;
  friend auto operator<=>(const PrishParams&, const PrishParams&) = default;
};

/// Normalization data for P(r,n,k,r-1,q) ~ free product of d copies of P(r,N,K,r-1,1).
struct Reduction {
  std::int64_t d = 1;       // gcd(n, q)
  std::int64_t N = 2;       // n / d
  std::int64_t Q = 1;       // q / d
  std::int64_t Qhat = 1;    // Q^{-1} mod N, in [1, N)
  std::int64_t Kprime = 1;  // k - 1 = d (Kprime - 1)
  std::int64_t K = 1;       // Qhat (Kprime - 1) + 1 reduced into [1, N]
  std::int64_t copies = 1;  // = d
  PrishParams reduced;
};

CyclicWord word_of(const PrishParams& p);

/// Exponent-sum vector of word_of(p), built directly without the word.
std::vector<std::int64_t> exponent_vector(const PrishParams& p);

/// f(t) = sum_{i<r} t^{qi} - t^{k-1} sum_{i<s} t^{qi}; exponents not reduced mod n.
IntPoly poly_general(const PrishParams& p);

/// F(t) = sum_{i<r} t^i - t^{k-1} sum_{i<r-1} t^i. Requires r >= 2.
IntPoly poly_F(std::int64_t r, std::int64_t k);

/// G(t) = sum_{i<k-1} t^i - t^r sum_{i<k-2} t^i. Requires k >= 2.
IntPoly poly_G(std::int64_t r, std::int64_t k);

/// (k, r) -> (r + 1, k - 1). Returned as (k', r').
std::pair<std::int64_t, std::int64_t> involution(std::int64_t k, std::int64_t r);

/// P(r,n,k,s,q) ~ P(s,n,n-k+2,r,q), with the k slot normalized into [1, n].
PrishParams flip(const PrishParams& p);

/// Requires s = r - 1, k = 1 (mod gcd(n,q)) and n / gcd(n,q) >= 2; throws
/// ReductionError naming the failed precondition otherwise.
Reduction reduce(const PrishParams& p);

} // namespace cycpres
