#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycpres/exact_linear.hpp"
#include "cycpres/poly.hpp"
#include "cycpres/prishchepov.hpp"

namespace cycpres {

/// H_1 of a cyclically presented group, read off its circulant relation matrix.
struct AbelianReport {
  Integer det;  // det circ_n(c) = R_n(f_C)
  SmithForm invariant_factors;
  bool is_perfect = false;    // |det| == 1
  bool is_finite_ab = false;  // det != 0
};

struct TypeFlags {
  bool type_Z = false;       // q(r-s) = 2(k-1)  (mod n)
  bool type_Zprime = false;  // q(r+s) = 0       (mod n)
  bool obvious_k1 = false;   // k = 1            (mod n)
  bool obvious_k1q = false;  // k = 1 + q        (mod n)
  bool obvious_r0 = false;   // r = 0            (mod n)
  bool obvious_s0 = false;   // s = 0            (mod n)

  bool type_Ztilde() const noexcept { return type_Z || type_Zprime; }
  bool any_obvious() const noexcept { return obvious_k1 || obvious_k1q || obvious_r0 || obvious_s0; }
};

/// Witness of eps * z^j * F(z) = F(1/z) at a primitive n-th root of unity z.
struct UnitSymmetry {
  std::int64_t j = 0;
  int epsilon = 1;

  friend bool operator==(const UnitSymmetry&, const UnitSymmetry&) = default;
};

enum class Verdict { Perfect, NotPerfect, Inapplicable };

struct Classification {
  Verdict verdict = Verdict::Inapplicable;
  std::string reason;  // failed hypothesis when Inapplicable
};

std::string_view verdict_name(Verdict v);

/// Abelianization of G_n(w) for an arbitrary word: Bareiss determinant plus SNF.
AbelianReport abelianization(const CyclicWord& w);

/// Abelianization of P(r,n,k,s,q) through word_of(p).
AbelianReport abelianization(const PrishParams& p);

/// |det| of the relation matrix == 1, decided by the exact multimodular determinant.
bool is_perfect(const PrishParams& p);

/// Exact det of the relation matrix via the multimodular route.
Integer relation_determinant(const PrishParams& p);

TypeFlags type_flags(const PrishParams& p);

/// Perfect iff s = r-1, gcd(n,q) = 1 and gcd(k-1-qr, n) = 1, provided that
/// r >= s >= 1, gcd(n, k-1, q) = 1 and gcd(n, 6) = 1; Inapplicable otherwise.
Classification corollary_b_classify(const PrishParams& p);

/// For groups of type Z~ with r >= s >= 1 and gcd(n, k-1, q) = 1:
/// perfect iff |r-s| = 1, gcd(n,q) = 1 and gcd(k-1-qr, n) = 1.
Classification theorem_c_classify(const PrishParams& p);

/// Congruence side of the triviality criterion for type Z groups (r >= s >= 1,
/// gcd(n,k-1,q) = 1): |r-s| = 1 and k = 1 or k = 1 + q(r-s) (mod n).
/// Returns nullopt outside those hypotheses. Triviality itself is not decided here.
std::optional<bool> corollary_d_condition(const PrishParams& p);

/// is_perfect(p) implies type Z, type Z' or one of the four obvious congruences.
/// Throws HypothesisError unless gcd(n, 6) = 1.
bool theorem_a_instance(const PrishParams& p);

/// f(zeta_d) is a unit of Z[zeta_d]: |Res(Phi_d, f)| == 1 (|f(1)| == 1 for d = 1).
bool is_unit_at(const IntPoly& f, std::int64_t d);

/// Exhaustive search over eps = +1 then -1 and ascending j in [0, n) for
/// Phi_n | eps * t^{j+D} F(t) - t^D F(1/t), D = deg F, F = poly_F(r, k).
std::optional<UnitSymmetry> unit_symmetry_search(std::int64_t n, std::int64_t r, std::int64_t k);

/// Unit-symmetry lemma instance: a witness with r != 0,1 and k != 1,2 (mod n)
/// forces 2r = 1 or 2k = 3 (mod n). Throws HypothesisError unless gcd(n, 6) = 1.
bool main_lemma_instance(std::int64_t n, std::int64_t r, std::int64_t k);

struct NewtonGirardResult {
  bool power_sums_equal = false;
  bool multisets_equal = false;
};

/// Compares sum_z t^{jz} and sum_w t^{jw} in Z[t]/Phi_n for j = 1..|Z|, and the
/// multisets themselves (as residues mod n). Throws DomainError on size mismatch.
NewtonGirardResult newton_girard_check(std::int64_t n, const std::vector<std::int64_t>& Z,
                                       const std::vector<std::int64_t>& W);

} // namespace cycpres
