#include "cycpres/prishchepov.hpp"

#include "cycpres/errors.hpp"

namespace cycpres {

PrishParams PrishParams::make(std::int64_t r, std::int64_t n, std::int64_t k, std::int64_t s,
                              std::int64_t q) {
  if (n < 2) throw DomainError("P(r,n,k,s,q) needs n >= 2, got n = " + std::to_string(n));
  if (r < 1 || k < 1 || s < 1 || q < 1)
    throw DomainError("P(r,n,k,s,q) needs r, k, s, q >= 1");
  return PrishParams{r, n, k, s, q};
}

std::string PrishParams::key() const {
  return std::to_string(r) + "," + std::to_string(n) + "," + std::to_string(k) + "," +
         std::to_string(s) + "," + std::to_string(q);
}

CyclicWord word_of(const PrishParams& p) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(p.r + p.s));
  for (std::int64_t i = 0; i < p.r; ++i) letters.push_back({mod_floor(i * p.q, p.n), 1});
  for (std::int64_t i = p.s - 1; i >= 0; --i)
    letters.push_back({mod_floor(p.k - 1 + i * p.q, p.n), -1});
  return CyclicWord(p.n, std::move(letters));
}

std::vector<std::int64_t> exponent_vector(const PrishParams& p) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(p.n), 0);
  std::int64_t e = 0;
  const std::int64_t step = mod_floor(p.q, p.n);
  for (std::int64_t i = 0; i < p.r; ++i) {
    ++c[static_cast<std::size_t>(e)];
    e += step;
    if (e >= p.n) e -= p.n;
  }
  e = mod_floor(p.k - 1, p.n);
  for (std::int64_t i = 0; i < p.s; ++i) {
    --c[static_cast<std::size_t>(e)];
    e += step;
    if (e >= p.n) e -= p.n;
  }
  return c;
}

IntPoly poly_general(const PrishParams& p) {
  std::vector<Integer> c(static_cast<std::size_t>(
      std::max((p.r - 1) * p.q, p.k - 1 + (p.s - 1) * p.q) + 1));
  for (std::int64_t i = 0; i < p.r; ++i) c[static_cast<std::size_t>(i * p.q)] += 1;
  for (std::int64_t i = 0; i < p.s; ++i) c[static_cast<std::size_t>(p.k - 1 + i * p.q)] -= 1;
  return IntPoly(std::move(c));
}

IntPoly poly_F(std::int64_t r, std::int64_t k) {
  if (r < 2) throw DomainError("poly_F needs r >= 2");
  if (k < 1) throw DomainError("poly_F needs k >= 1");
  std::vector<Integer> c(static_cast<std::size_t>(std::max(r - 1, k - 1 + r - 2) + 1));
  for (std::int64_t i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] += 1;
  for (std::int64_t i = 0; i < r - 1; ++i) c[static_cast<std::size_t>(k - 1 + i)] -= 1;
  return IntPoly(std::move(c));
}

IntPoly poly_G(std::int64_t r, std::int64_t k) {
  if (k < 2) throw DomainError("poly_G needs k >= 2");
  if (r < 0) throw DomainError("poly_G needs r >= 0");
  std::vector<Integer> c(static_cast<std::size_t>(std::max(k - 2, r + k - 3) + 1));
  for (std::int64_t i = 0; i < k - 1; ++i) c[static_cast<std::size_t>(i)] += 1;
  for (std::int64_t i = 0; i < k - 2; ++i) c[static_cast<std::size_t>(r + i)] -= 1;
  return IntPoly(std::move(c));
}

std::pair<std::int64_t, std::int64_t> involution(std::int64_t k, std::int64_t r) {
  return {r + 1, k - 1};
}

PrishParams flip(const PrishParams& p) {
  return PrishParams{p.s, p.n, mod_floor(p.n - p.k + 1, p.n) + 1, p.r, p.q};
}

namespace {

// Inverse of a modulo m (gcd(a, m) = 1, m >= 2), in [1, m).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  return mod_floor(old_s, m);
}

} // namespace

Reduction reduce(const PrishParams& p) {
  if (p.s != p.r - 1)
    throw ReductionError(ReductionError::Kind::Shape,
                         "reduction needs s = r - 1, got r = " + std::to_string(p.r) +
                             ", s = " + std::to_string(p.s));
  Reduction red;
  red.d = gcd_i64(p.n, p.q);
  if ((p.k - 1) % red.d != 0)
    throw ReductionError(ReductionError::Kind::Inapplicable,
                         "reduction needs k = 1 (mod gcd(n,q) = " + std::to_string(red.d) + ")");
  red.N = p.n / red.d;
  if (red.N < 2)
    throw ReductionError(ReductionError::Kind::Degenerate,
                         "reduction degenerates to n = 1 (q = 0 mod n)");
  red.Q = p.q / red.d;
  red.Qhat = inverse_mod(red.Q, red.N);
  red.Kprime = (p.k - 1) / red.d + 1;
  red.K = mod_floor(red.Qhat * (red.Kprime - 1), red.N) + 1;
  red.copies = red.d;
  red.reduced = PrishParams{p.r, red.N, red.K, p.r - 1, 1};
  return red;
}

} // namespace cycpres
