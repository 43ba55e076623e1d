#pragma once

#include <stdexcept>
#include <string>

namespace adomian {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text: polynomial, expression, grid spec or problem file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A polynomial was evaluated without a value for one of its variables.
class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Negative power of a series whose leading coefficient is zero or not a constant.
class NonInvertibleLeadingTerm : public Error {
 public:
  using Error::Error;
};

/// A reciprocal power was evaluated on a base too close to zero.
class DivisionNearZero : public Error {
 public:
  using Error::Error;
};

/// The minimizer could not find an interior minimum in the requested bracket.
class BracketError : public Error {
 public:
  using Error::Error;
};

class UnknownProblem : public Error {
 public:
  explicit UnknownProblem(const std::string& id) : Error("unknown problem '" + id + "'") {}
};

}  // namespace adomian
