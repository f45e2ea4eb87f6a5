#include "cycpres/exact_linear.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cycpres/errors.hpp"
#include "cycpres/poly.hpp"

namespace cycpres {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

Integer SmithForm::nonzero_product() const {
  Integer p = 1;
  for (const auto& d : invariant_factors)
    if (d != 0) p *= d;
  return p;
}

std::size_t SmithForm::rank() const {
  return static_cast<std::size_t>(std::count_if(invariant_factors.begin(), invariant_factors.end(),
                                                [](const Integer& d) { return d != 0; }));
}

Integer det(const IntMatrix& m) {
  if (!m.is_square())
    throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity: the division is exact.
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Smallest |a(i,j)| over i, j >= t; false if the block is zero.
bool find_min_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Integer& v = a(i, j);
      if (v == 0) continue;
      if (!found || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
        best = abs(v);
        pi = i;
        pj = j;
        found = true;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t diag = std::min(rows, cols);
  SmithForm out;
  out.invariant_factors.assign(diag, Integer(0));

  Integer q;
  for (std::size_t t = 0; t < diag; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_min_pivot(a, t, pi, pj)) break;
    a.swap_rows(t, pi);
    a.swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      const Integer pivot = a(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) dirty = true;
      }

      if (!dirty) {
        // Row t and column t are clear; enforce pivot | every remaining entry.
        std::size_t bad_row = rows;
        for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (!mpz_divisible_p(a(i, j).get_mpz_t(), pivot.get_mpz_t())) {
              bad_row = i;
              break;
            }
        if (bad_row == rows) break;
        for (std::size_t j = t; j < cols; ++j) a(t, j) += a(bad_row, j);
      }

      // A remainder smaller than the pivot now sits in row/column t.
      std::size_t bi = t, bj = t;
      Integer best = abs(a(t, t));
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a(i, t) != 0 && mpz_cmpabs(a(i, t).get_mpz_t(), best.get_mpz_t()) < 0) {
          best = abs(a(i, t));
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a(t, j) != 0 && mpz_cmpabs(a(t, j).get_mpz_t(), best.get_mpz_t()) < 0) {
          best = abs(a(t, j));
          bi = t;
          bj = j;
        }
      a.swap_rows(t, bi);
      a.swap_cols(t, bj);
    }
    out.invariant_factors[t] = abs(a(t, t));
  }
  return out;
}

IntMatrix sylvester(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw UndefinedResultantError("Sylvester matrix of a zero polynomial");
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  IntMatrix s(m + n, m + n);
  // Row i of the f-block holds lc(f) ... f_0 starting at column i.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = f.coeffs()[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = g.coeffs()[n - k];
  return s;
}

} // namespace cycpres
