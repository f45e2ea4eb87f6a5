#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cycpres/exact_linear.hpp"
#include "cycpres/poly.hpp"

namespace cycpres {

struct Letter {
  std::int64_t index = 0;     // generator x_index, in [0, n)
  std::int64_t exponent = 1;  // nonzero

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the free group F_n on x_0, ..., x_{n-1}. Not freely reduced.
class CyclicWord {
public:
  CyclicWord() = default;
  /// Throws DomainError if n < 1, an index is outside [0, n) or an exponent is 0.
  CyclicWord(std::int64_t n, std::vector<Letter> letters);

  std::int64_t rank() const noexcept { return n_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  /// Canonical text form: `x<i>` / `X<i>` with `^<|e|>` when |e| > 1.
  std::string to_string() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

private:
  std::int64_t n_ = 1;
  std::vector<Letter> letters_;
};

/// Parses whitespace-separated tokens `x<i>` or `X<i>`, each optionally
/// followed by `^<e>` with e a nonzero integer; `X3^2` is x_3^{-2}.
/// Throws ParseError carrying the byte offset of the offending token.
CyclicWord parse_word(std::string_view text, std::int64_t n);

/// theta: x_i -> x_{i+1 mod n}.
CyclicWord shift(const CyclicWord& w);

/// c_i = total exponent of x_i in w.
std::vector<std::int64_t> exponent_sums(const CyclicWord& w);

/// circ_n(c): row i is c cyclically shifted right by i, i.e. entry (i, j) = c_{j-i}.
/// Row i is the relator theta^i(w), column j the generator x_j.
IntMatrix circulant_of(const std::vector<std::int64_t>& c);

/// f_C(t) = sum c_i t^i.
IntPoly rep_poly(const std::vector<std::int64_t>& c);

} // namespace cycpres
