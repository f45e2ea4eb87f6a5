#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cycpres/integer.hpp"

namespace cycpres {

class IntPoly;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntMatrix transposed() const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Invariant factors d_1 | d_2 | ... | d_m (m = min(rows, cols)); zeros trail.
struct SmithForm {
  std::vector<Integer> invariant_factors;

  /// Product of the nonzero factors; equals |det| for a nonsingular square input.
  Integer nonzero_product() const;
  std::size_t rank() const;

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Throws DimensionError for non-square input. The 0x0 determinant is 1.
Integer det(const IntMatrix& m);

/// Smith normal form by elimination pivoting on the smallest nonzero magnitude.
SmithForm smith_normal_form(const IntMatrix& m);

/// Sylvester matrix of f and g, size deg f + deg g, with the rows of f first.
/// Its determinant is Res(f, g) = lc(f)^{deg g} * prod_{f(a)=0} g(a).
/// Throws UndefinedResultantError if either polynomial is zero.
IntMatrix sylvester(const IntPoly& f, const IntPoly& g);

} // namespace cycpres
