#include "cycpres/circulant_mod.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

#include "cycpres/cyclic_words.hpp"
#include "cycpres/errors.hpp"
#include "cycpres/exact_linear.hpp"

namespace cycpres {

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (e) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

constexpr std::uint32_t kPrimeCeiling = (1u << 31) - 1;

} // namespace

bool is_prime_u32(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t sp : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (v == sp) return true;
    if (v % sp == 0) return false;
  }
  std::uint32_t d = v - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases 2, 7, 61 are deterministic below 4759123141.
  for (std::uint32_t a : {2u, 7u, 61u}) {
    if (a % v == 0) continue;
    std::uint32_t x = pow_mod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, v);
      if (x == v - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

CirculantModular::CirculantModular(std::int64_t n) : n_(n) {
  if (n < 1 || n > 4096) throw DomainError("circulant size out of range");
  primes_.reserve(kMaxPrimes);
}

const CirculantModular::Prime& CirculantModular::prime(std::size_t index) const {
  if (index >= kMaxPrimes) throw DomainError("prime index beyond capacity");
  if (index < ready_.load(std::memory_order_acquire)) return *primes_[index];

  std::lock_guard lock(grow_mutex_);
  const auto n = static_cast<std::uint64_t>(n_);
  const auto factors = prime_factors(n_);
  while (primes_.size() <= index) {
    std::uint64_t m = primes_.empty() ? (kPrimeCeiling - 1) / n
                                      : (static_cast<std::uint64_t>(primes_.back()->p) - 1) / n - 1;
    for (;; --m) {
      if (m == 0) throw DomainError("ran out of primes congruent to 1 mod n");
      const auto cand = static_cast<std::uint32_t>(m * n + 1);
      if (is_prime_u32(cand)) break;
    }
    auto pr = std::make_unique<Prime>();
    pr->p = static_cast<std::uint32_t>(m * n + 1);
    const std::uint64_t cofactor = (pr->p - 1) / n;
    for (std::uint32_t g = 2;; ++g) {
      const std::uint32_t w = pow_mod(g, cofactor, pr->p);
      bool exact = true;
      for (auto f : factors)
        if (pow_mod(w, n / static_cast<std::uint64_t>(f), pr->p) == 1) exact = false;
      if (exact) {
        pr->root = w;
        break;
      }
    }
    std::vector<std::uint32_t> powers(n);
    powers[0] = 1 % pr->p;
    for (std::size_t i = 1; i < n; ++i) powers[i] = mul_mod(powers[i - 1], pr->root, pr->p);
    pr->table.resize(n * n);
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t i = 0; i < n; ++i) pr->table[e * n + i] = powers[(e * i) % n];
    primes_.push_back(std::move(pr));
    ready_.store(primes_.size(), std::memory_order_release);
  }
  return *primes_[index];
}

CirculantModular::Terms CirculantModular::prepare(std::span<const std::int64_t> c) const {
  if (static_cast<std::int64_t>(c.size()) != n_)
    throw DimensionError("circulant row of length " + std::to_string(c.size()) +
                         " for size " + std::to_string(n_));
  Terms t;
  double sum_sq = 0;
  double sum_abs = 0;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    t.zero = false;
    const double v = static_cast<double>(c[e]);
    sum_sq += v * v;
    sum_abs += std::fabs(v);
    if (std::llabs(c[e]) >= (std::int64_t{1} << 31)) t.kernel_safe = false;
    else t.terms.push_back({static_cast<std::uint32_t>(e), static_cast<std::int32_t>(c[e])});
  }
  if (sum_abs >= 4294967296.0) t.kernel_safe = false;
  t.log2_sum_squares = t.zero ? 0 : std::log2(sum_sq);
  return t;
}

std::size_t CirculantModular::primes_needed(const Terms& t) const {
  // prod p > 2 * H with H = S^{n/2}; each prime contributes >= 30 bits.
  const double bits = 0.5 * static_cast<double>(n_) * t.log2_sum_squares + 2.0;
  const auto need = static_cast<std::size_t>(std::ceil(bits / 30.0));
  return need == 0 ? 1 : need;
}

std::uint32_t CirculantModular::residue_for(const Terms& t, const Prime& pr) const {
  const auto n = static_cast<std::size_t>(n_);
  thread_local std::vector<std::int64_t> acc;
  acc.assign(n, 0);
  simd::accumulate_terms(t.terms, pr.table.data(), n, acc.data());
  const auto p = static_cast<std::int64_t>(pr.p);
  std::uint32_t prod = 1 % pr.p;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t v = acc[i] % p;
    if (v < 0) v += p;
    prod = mul_mod(prod, static_cast<std::uint32_t>(v), pr.p);
    if (prod == 0) break;
  }
  return prod;
}

std::uint32_t CirculantModular::residue(std::span<const std::int64_t> c,
                                        std::size_t prime_index) const {
  const Terms t = prepare(c);
  if (!t.kernel_safe) throw DomainError("coefficients too large for modular kernels");
  return residue_for(t, prime(prime_index));
}

Integer CirculantModular::determinant(std::span<const std::int64_t> c) const {
  const Terms t = prepare(c);
  if (t.zero) return 0;
  const std::size_t need = primes_needed(t);
  if (!t.kernel_safe || need > kMaxPrimes)
    return det(circulant_of(std::vector<std::int64_t>(c.begin(), c.end())));

  Integer x = 0, modulus = 1, tmp;
  for (std::size_t i = 0; i < need; ++i) {
    const Prime& pr = prime(i);
    const std::uint32_t r = residue_for(t, pr);
    // x += modulus * ((r - x) * modulus^{-1} mod p)
    const std::uint32_t x_mod = static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), pr.p));
    const std::uint32_t m_mod = static_cast<std::uint32_t>(mpz_fdiv_ui(modulus.get_mpz_t(), pr.p));
    const std::uint32_t diff = (r + pr.p - x_mod) % pr.p;
    const std::uint32_t inv = pow_mod(m_mod, pr.p - 2, pr.p);
    const std::uint32_t lift = mul_mod(diff, inv, pr.p);
    tmp = modulus * lift;
    x += tmp;
    modulus *= pr.p;
  }
  tmp = modulus / 2;
  if (x > tmp) x -= modulus;
  return x;
}

bool CirculantModular::is_unimodular(std::span<const std::int64_t> c) const {
  const Terms t = prepare(c);
  if (t.zero) return false;
  const std::size_t need = primes_needed(t);
  if (!t.kernel_safe || need > kMaxPrimes) return abs(determinant(c)) == 1;

  int sign = 0;
  for (std::size_t i = 0; i < need; ++i) {
    const Prime& pr = prime(i);
    const std::uint32_t r = residue_for(t, pr);
    const int s = r == 1 ? 1 : (r == pr.p - 1 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) return false;
    sign = s;
  }
  return true;
}

const CirculantModular& circulant_modular(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<CirculantModular>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[n];
  if (!slot) slot = std::make_unique<CirculantModular>(n);
  return *slot;
}

Integer circulant_det(std::span<const std::int64_t> c) {
  if (c.empty()) return 1;
  return circulant_modular(static_cast<std::int64_t>(c.size())).determinant(c);
}

bool circulant_is_unimodular(std::span<const std::int64_t> c) {
  if (c.empty()) return true;
  return circulant_modular(static_cast<std::int64_t>(c.size())).is_unimodular(c);
}

} // namespace cycpres
