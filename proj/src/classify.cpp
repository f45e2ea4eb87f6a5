#include "cycpres/classify.hpp"

#include <algorithm>

#include "cycpres/circulant_mod.hpp"
#include "cycpres/cyclic_words.hpp"
#include "cycpres/errors.hpp"

namespace cycpres {

std::string_view verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Perfect:
    return "Perfect";
  case Verdict::NotPerfect:
    return "NotPerfect";
  case Verdict::Inapplicable:
    return "Inapplicable";
  }
  return "?";
}

AbelianReport abelianization(const CyclicWord& w) {
  const IntMatrix c = circulant_of(exponent_sums(w));
  AbelianReport rep;
  rep.det = det(c);
  rep.is_perfect = abs(rep.det) == 1;
  rep.is_finite_ab = rep.det != 0;
  if (rep.is_perfect)
    rep.invariant_factors.invariant_factors.assign(c.rows(), Integer(1));
  else
    rep.invariant_factors = smith_normal_form(c);
  if (rep.is_finite_ab && rep.invariant_factors.nonzero_product() != abs(rep.det))
    throw ConsistencyError("Smith form disagrees with the determinant");
  return rep;
}

AbelianReport abelianization(const PrishParams& p) { return abelianization(word_of(p)); }

bool is_perfect(const PrishParams& p) { return circulant_is_unimodular(exponent_vector(p)); }

Integer relation_determinant(const PrishParams& p) { return circulant_det(exponent_vector(p)); }

TypeFlags type_flags(const PrishParams& p) {
  const std::int64_t n = p.n;
  auto zero = [n](std::int64_t v) { return mod_floor(v, n) == 0; };
  TypeFlags f;
  f.type_Z = zero(p.q * (p.r - p.s) - 2 * (p.k - 1));
  f.type_Zprime = zero(p.q * (p.r + p.s));
  f.obvious_k1 = zero(p.k - 1);
  f.obvious_k1q = zero(p.k - 1 - p.q);
  f.obvious_r0 = zero(p.r);
  f.obvious_s0 = zero(p.s);
  return f;
}

namespace {

std::optional<std::string> common_hypotheses(const PrishParams& p) {
  if (p.n < 2) return "n < 2";
  if (p.k < 1 || p.q < 1) return "k, q must be >= 1";
  if (!(p.r >= p.s && p.s >= 1)) return "needs r >= s >= 1";
  if (gcd_i64(gcd_i64(p.n, p.k - 1), p.q) != 1) return "gcd(n, k-1, q) != 1";
  return std::nullopt;
}

bool criterion_conditions(const PrishParams& p, std::int64_t diff) {
  return diff == 1 && gcd_i64(p.n, p.q) == 1 && gcd_i64(p.k - 1 - p.q * p.r, p.n) == 1;
}

} // namespace

Classification corollary_b_classify(const PrishParams& p) {
  if (auto why = common_hypotheses(p)) return {Verdict::Inapplicable, *why};
  if (gcd_i64(p.n, 6) != 1) return {Verdict::Inapplicable, "gcd(n, 6) != 1"};
  // r >= s, so s = r - 1 is the same as |r - s| = 1.
  return {criterion_conditions(p, p.r - p.s) ? Verdict::Perfect : Verdict::NotPerfect, {}};
}

Classification theorem_c_classify(const PrishParams& p) {
  if (auto why = common_hypotheses(p)) return {Verdict::Inapplicable, *why};
  if (!type_flags(p).type_Ztilde()) return {Verdict::Inapplicable, "not of type Z~"};
  return {criterion_conditions(p, p.r - p.s) ? Verdict::Perfect : Verdict::NotPerfect, {}};
}

std::optional<bool> corollary_d_condition(const PrishParams& p) {
  if (common_hypotheses(p) || !type_flags(p).type_Z) return std::nullopt;
  if (p.r - p.s != 1) return false;
  return mod_floor(p.k - 1, p.n) == 0 || mod_floor(p.k - 1 - p.q * (p.r - p.s), p.n) == 0;
}

bool theorem_a_instance(const PrishParams& p) {
  if (gcd_i64(p.n, 6) != 1)
    throw HypothesisError("Theorem A instance needs gcd(n, 6) = 1, got n = " + std::to_string(p.n));
  if (!is_perfect(p)) return true;
  const TypeFlags f = type_flags(p);
  return f.type_Ztilde() || f.any_obvious();
}

bool is_unit_at(const IntPoly& f, std::int64_t d) {
  if (d < 1) throw DomainError("is_unit_at: d must be positive");
  if (f.is_zero()) return false;
  if (d == 1) return abs(f.evaluate(1)) == 1;
  const IntPoly phi = cyclotomic(d);
  const IntPoly reduced = reduce_mod(f, phi);
  if (reduced.is_zero()) return false;
  return abs(resultant(phi, reduced)) == 1;
}

std::optional<UnitSymmetry> unit_symmetry_search(std::int64_t n, std::int64_t r, std::int64_t k) {
  if (n < 2) throw DomainError("unit_symmetry_search needs n >= 2");
  const IntPoly F = poly_F(r, k);
  if (F.is_zero()) return std::nullopt;
  const long D = F.degree();
  const auto size = static_cast<std::size_t>(n);
  const IntPoly phi = cyclotomic(n);

  // Work with length-n coefficient vectors modulo t^n - 1; multiplying by t^a rotates.
  std::vector<Integer> folded(size), rev(size);
  for (std::size_t i = 0; i < F.coeffs().size(); ++i) folded[i % size] += F.coeffs()[i];
  const IntPoly reversed = reversal(F, D);
  for (std::size_t i = 0; i < reversed.coeffs().size(); ++i) rev[i % size] += reversed.coeffs()[i];

  std::vector<Integer> h(size);
  for (int eps : {1, -1}) {
    for (std::int64_t j = 0; j < n; ++j) {
      const auto s = static_cast<std::size_t>(mod_floor(j + D, n));
      for (std::size_t i = 0; i < size; ++i) {
        h[(i + s) % size] = folded[i];
        if (eps < 0) h[(i + s) % size] = -folded[i];
      }
      for (std::size_t i = 0; i < size; ++i) h[i] -= rev[i];
      if (reduce_mod(IntPoly(h), phi).is_zero()) return UnitSymmetry{j, eps};
    }
  }
  return std::nullopt;
}

bool main_lemma_instance(std::int64_t n, std::int64_t r, std::int64_t k) {
  if (gcd_i64(n, 6) != 1)
    throw HypothesisError("lemma instance needs gcd(n, 6) = 1, got n = " + std::to_string(n));
  const std::int64_t rm = mod_floor(r, n), km = mod_floor(k, n);
  if (rm == 0 || rm == 1 || km == 1 || km == 2) return true;
  if (!unit_symmetry_search(n, r, k)) return true;
  return mod_floor(2 * r - 1, n) == 0 || mod_floor(2 * k - 3, n) == 0;
}

NewtonGirardResult newton_girard_check(std::int64_t n, const std::vector<std::int64_t>& Z,
                                       const std::vector<std::int64_t>& W) {
  if (n < 2) throw DomainError("newton_girard_check needs n >= 2");
  if (Z.size() != W.size() || Z.empty())
    throw DomainError("newton_girard_check needs equal nonempty multisets");
  const auto size = static_cast<std::size_t>(n);
  const IntPoly phi = cyclotomic(n);

  auto power_sum = [&](const std::vector<std::int64_t>& m, std::int64_t j) {
    std::vector<Integer> v(size);
    for (auto e : m) v[static_cast<std::size_t>(mod_floor(j * e, n))] += 1;
    return reduce_mod(IntPoly(std::move(v)), phi);
  };

  NewtonGirardResult out;
  out.power_sums_equal = true;
  for (std::int64_t j = 1; j <= static_cast<std::int64_t>(Z.size()); ++j)
    if (power_sum(Z, j) != power_sum(W, j)) {
      out.power_sums_equal = false;
      break;
    }

  auto canonical = [n](std::vector<std::int64_t> m) {
    for (auto& e : m) e = mod_floor(e, n);
    std::sort(m.begin(), m.end());
    return m;
  };
  out.multisets_equal = canonical(Z) == canonical(W);
  return out;
}

} // namespace cycpres
