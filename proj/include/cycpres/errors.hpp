#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cycpres {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (d = 0, D < deg f, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

// Exact polynomial division left a remainder.
class DivisibilityError : public Error {
public:
  using Error::Error;
};

class UndefinedResultantError : public Error {
public:
  using Error::Error;
};

// A theorem-instance check was called outside the theorem's hypotheses.
class HypothesisError : public Error {
public:
  using Error::Error;
};

// Two independent computation routes disagreed.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class ReductionError : public Error {
public:
  enum class Kind { Shape, Inapplicable, Degenerate };

  ReductionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

} // namespace cycpres
