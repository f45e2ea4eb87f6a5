#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cycpres/integer.hpp"

namespace cycpres {

/// Dense polynomial over Z; coeffs()[i] is the coefficient of t^i.
/// Always normalized: no trailing zero coefficients, the zero polynomial is empty.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(Integer coeff, std::size_t exponent);
  static IntPoly from_small(const std::vector<std::int64_t>& coeffs);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Integer& leading() const { return coeffs_.back(); }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  Integer evaluate(const Integer& x) const;
  /// gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;

  std::string to_string() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) { return a *= Integer(-1); }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// f / g over Z; throws DivisibilityError on a nonzero remainder and
/// DomainError when g is zero.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);

/// Remainder of f modulo a monic m. Throws DomainError if m is not monic.
IntPoly reduce_mod(const IntPoly& f, const IntPoly& m);

/// Folds exponents modulo n, i.e. the remainder of f by t^n - 1.
IntPoly fold_mod_xn_minus_1(const IntPoly& f, std::size_t n);

/// t^D * f(1/t). Throws DomainError when D < deg f.
IntPoly reversal(const IntPoly& f, long bound);

/// Pseudo-remainder lc(g)^{deg f - deg g + 1} f mod g.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

std::vector<std::int64_t> divisors(std::int64_t n);
int mobius(std::int64_t n);

/// The d-th cyclotomic polynomial via prod_{e|d} (t^e - 1)^{mu(d/e)}.
IntPoly cyclotomic(std::int64_t d);

/// Res(f, g) = lc(f)^{deg g} prod_{f(a)=0} g(a), by the subresultant PRS.
/// Throws UndefinedResultantError if either input is zero.
Integer resultant(const IntPoly& f, const IntPoly& g);

/// R_n(f) = det circ_n(f_0, ..., f_{n-1}). The determinant is computed by
/// Bareiss elimination and its magnitude is checked against
/// prod_{d|n} |Res(f, Phi_d)|; a mismatch throws ConsistencyError.
/// Requires deg f < n (DomainError otherwise). The zero polynomial gives 0.
Integer circulant_resultant(const IntPoly& f, std::int64_t n);

/// prod_{d|n} |Res(f, Phi_d)|, the cyclotomic side of circulant_resultant on its own.
Integer cyclotomic_norm_product(const IntPoly& f, std::int64_t n);

} // namespace cycpres
