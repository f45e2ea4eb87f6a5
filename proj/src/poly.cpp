#include "cycpres/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cycpres/errors.hpp"
#include "cycpres/exact_linear.hpp"

namespace cycpres {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(Integer coeff, std::size_t exponent) {
  std::vector<Integer> c(exponent + 1);
  c[exponent] = std::move(coeff);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::from_small(const std::vector<std::int64_t>& coeffs) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.emplace_back(static_cast<long>(v));
  return IntPoly(std::move(c));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& v : coeffs_) v *= c;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw DivisibilityError("exact_div: " + g.to_string() +
                                                       " does not divide " + f.to_string());
  std::vector<Integer> rem = f.coeffs();
  const auto dg = static_cast<std::size_t>(g.degree());
  const auto dq = static_cast<std::size_t>(f.degree() - g.degree());
  std::vector<Integer> quot(dq + 1);
  const Integer& lc = g.leading();
  for (std::size_t step = dq + 1; step-- > 0;) {
    Integer& top = rem[step + dg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
      throw DivisibilityError("exact_div: " + g.to_string() + " does not divide " + f.to_string());
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= dg; ++j) rem[step + j] -= c * g.coeffs()[j];
    quot[step] = std::move(c);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& v) { return v != 0; }))
    throw DivisibilityError("exact_div: " + g.to_string() + " does not divide " + f.to_string());
  return IntPoly(std::move(quot));
}

IntPoly reduce_mod(const IntPoly& f, const IntPoly& m) {
  if (m.is_zero() || m.leading() != 1) throw DomainError("reduce_mod: modulus must be monic");
  if (f.degree() < m.degree()) return f;
  std::vector<Integer> rem = f.coeffs();
  const auto dm = static_cast<std::size_t>(m.degree());
  for (std::size_t top = rem.size(); top-- > dm;) {
    if (rem[top] == 0) continue;
    const Integer c = rem[top];
    for (std::size_t j = 0; j <= dm; ++j) rem[top - dm + j] -= c * m.coeffs()[j];
  }
  rem.resize(dm);
  return IntPoly(std::move(rem));
}

IntPoly fold_mod_xn_minus_1(const IntPoly& f, std::size_t n) {
  if (n == 0) throw DomainError("fold modulo t^0 - 1");
  if (f.coeffs().size() <= n) return f;
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i % n] += f.coeffs()[i];
  return IntPoly(std::move(out));
}

IntPoly reversal(const IntPoly& f, long bound) {
  if (bound < f.degree())
    throw DomainError("reversal: degree bound " + std::to_string(bound) + " below deg f = " +
                      std::to_string(f.degree()));
  if (f.is_zero()) return {};
  std::vector<Integer> out(static_cast<std::size_t>(bound) + 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    out[static_cast<std::size_t>(bound) - i] = f.coeffs()[i];
  return IntPoly(std::move(out));
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DomainError("pseudo-remainder by zero");
  if (f.degree() < g.degree()) return f;
  std::vector<Integer> rem = f.coeffs();
  const auto dg = static_cast<std::size_t>(g.degree());
  const Integer& lc = g.leading();
  // Each step multiplies by lc(g); exactly deg f - deg g + 1 steps are taken.
  for (std::size_t top = rem.size(); top-- > dg;) {
    const Integer c = rem[top];
    for (auto& v : rem) v *= lc;
    for (std::size_t j = 0; j <= dg; ++j) rem[top - dg + j] -= c * g.coeffs()[j];
  }
  rem.resize(dg);
  return IntPoly(std::move(rem));
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw DomainError("divisors of a non-positive integer");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(std::int64_t n) {
  if (n <= 0) throw DomainError("mobius of a non-positive integer");
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

IntPoly cyclotomic(std::int64_t d) {
  if (d <= 0) throw DomainError("cyclotomic: order must be positive");
  IntPoly num{1};
  std::vector<IntPoly> den;
  for (std::int64_t e : divisors(d)) {
    const int mu = mobius(d / e);
    if (mu == 0) continue;
    IntPoly factor = IntPoly::monomial(1, static_cast<std::size_t>(e)) - IntPoly{1};
    if (mu > 0)
      num = num * factor;
    else
      den.push_back(std::move(factor));
  }
  for (const auto& f : den) num = exact_div(num, f);
  return num;
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw UndefinedResultantError("resultant of a zero polynomial");

  IntPoly a = f, b = g;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -1;
  }
  if (b.degree() == 0) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(a.degree()));
    return sign * out;
  }

  const Integer ca = a.content(), cb = b.content();
  auto primitive = [](const IntPoly& p, const Integer& c) {
    std::vector<Integer> v = p.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(v));
  };
  a = primitive(a, ca);
  b = primitive(b, cb);
  Integer scale, tmp;
  mpz_pow_ui(scale.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(b.degree()));
  mpz_pow_ui(tmp.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
  scale *= tmp;

  Integer gcoef = 1, h = 1;
  for (;;) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;

    Integer divisor;
    mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    divisor *= gcoef;
    std::vector<Integer> v = r.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
    b = IntPoly(std::move(v));

    gcoef = a.leading();
    // h <- g^delta / h^(delta - 1), exact.
    Integer gpow, hpow;
    mpz_pow_ui(gpow.get_mpz_t(), gcoef.get_mpz_t(), static_cast<unsigned long>(delta));
    if (delta == 0) {
      h = h * gpow;  // h^1 * g^0
    } else {
      mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gpow.get_mpz_t(), hpow.get_mpz_t());
    }

    if (b.degree() == 0) {
      // h <- lc(b)^{deg a} / h^{deg a - 1}
      const auto da = static_cast<unsigned long>(a.degree());
      Integer num;
      mpz_pow_ui(num.get_mpz_t(), b.leading().get_mpz_t(), da);
      mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(), da - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), hpow.get_mpz_t());
      return sign * scale * h;
    }
  }
}

Integer cyclotomic_norm_product(const IntPoly& f, std::int64_t n) {
  if (f.is_zero()) return 0;
  Integer prod = 1;
  for (std::int64_t d : divisors(n)) {
    Integer r = resultant(f, cyclotomic(d));
    if (r == 0) return 0;
    prod *= abs(r);
  }
  return prod;
}

Integer circulant_resultant(const IntPoly& f, std::int64_t n) {
  if (n < 1) throw DomainError("circulant_resultant: n must be positive");
  if (f.degree() >= n)
    throw DomainError("circulant_resultant: deg f = " + std::to_string(f.degree()) +
                      " is not below n = " + std::to_string(n));
  if (f.is_zero()) return 0;

  const auto size = static_cast<std::size_t>(n);
  IntMatrix c(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) c(i, j) = f.coeff((j + size - i) % size);
  Integer value = det(c);

  const Integer norms = cyclotomic_norm_product(f, n);
  if (abs(value) != norms)
    throw ConsistencyError("circulant determinant " + value.get_str() +
                           " disagrees with cyclotomic norm product " + norms.get_str() +
                           " for f = " + f.to_string() + ", n = " + std::to_string(n));
  return value;
}

} // namespace cycpres
