#include "cycpres/cyclic_words.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "cycpres/errors.hpp"

namespace cycpres {

CyclicWord::CyclicWord(std::int64_t n, std::vector<Letter> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n_ < 1) throw DomainError("free group rank must be positive");
  for (const auto& l : letters_) {
    if (l.index < 0 || l.index >= n_)
      throw DomainError("generator index " + std::to_string(l.index) + " outside [0, " +
                        std::to_string(n_) + ")");
    if (l.exponent == 0) throw DomainError("zero exponent");
  }
}

std::string CyclicWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    if (i) os << ' ';
    os << (l.exponent > 0 ? 'x' : 'X') << l.index;
    const std::int64_t mag = l.exponent > 0 ? l.exponent : -l.exponent;
    if (mag != 1) os << '^' << mag;
  }
  return os.str();
}

namespace {

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  std::size_t start = s.front() == '+' ? 1 : 0;
  if (start == s.size()) return false;
  auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

CyclicWord parse_word(std::string_view text, std::int64_t n) {
  if (n < 1) throw DomainError("free group rank must be positive");
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t begin = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view token = text.substr(begin, pos - begin);
    const std::string quoted = "'" + std::string(token) + "'";

    if (token.front() != 'x' && token.front() != 'X')
      throw ParseError("token " + quoted + " must start with x or X", begin);
    const std::int64_t sign = token.front() == 'x' ? 1 : -1;

    const std::size_t caret = token.find('^');
    const std::string_view index_part = token.substr(1, caret == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : caret - 1);
    std::int64_t index = 0;
    if (!all_digits(index_part) || !parse_int(index_part, index))
      throw ParseError("token " + quoted + " has a malformed generator index", begin);
    if (index >= n)
      throw ParseError("token " + quoted + ": index " + std::to_string(index) +
                           " out of range for n = " + std::to_string(n),
                       begin);

    std::int64_t exponent = 1;
    if (caret != std::string_view::npos) {
      const std::string_view exp_part = token.substr(caret + 1);
      if (!parse_int(exp_part, exponent))
        throw ParseError("token " + quoted + " has a malformed exponent", begin);
      if (exponent == 0) throw ParseError("token " + quoted + " has exponent 0", begin);
    }
    letters.push_back({index, sign * exponent});
  }
  return CyclicWord(n, std::move(letters));
}

CyclicWord shift(const CyclicWord& w) {
  std::vector<Letter> out = w.letters();
  for (auto& l : out) l.index = (l.index + 1) % w.rank();
  return CyclicWord(w.rank(), std::move(out));
}

std::vector<std::int64_t> exponent_sums(const CyclicWord& w) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(w.rank()), 0);
  for (const auto& l : w.letters()) c[static_cast<std::size_t>(l.index)] += l.exponent;
  return c;
}

IntMatrix circulant_of(const std::vector<std::int64_t>& c) {
  const std::size_t n = c.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(c[(j + n - i) % n]);
  return m;
}

IntPoly rep_poly(const std::vector<std::int64_t>& c) { return IntPoly::from_small(c); }

} // namespace cycpres
