#ifndef HURWITZ_ERRORS_HPP
#define HURWITZ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation needs enumeration/sampling the ring does not offer.
class CapabilityMissing : public Error {
 public:
  using Error::Error;
};

/// Mathematical precondition violated (e.g. binomial with k > n).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Elements of two different rings were combined.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidIdeal : public Error {
 public:
  using Error::Error;
};

/// Constructor parameters rejected (composite p, reducible modulus, ...).
class InvalidConstruction : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A checker's mathematical hypothesis could not be established at the
/// requested bounds.
class HypothesisNotEstablished : public Error {
 public:
  using Error::Error;
};

class NotAbelian : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class UnknownScenario : public Error {
 public:
  using Error::Error;
};

/// An invariant the library relies on was observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Element literal that does not denote an element of the target ring.
class LiteralError : public Error {
 public:
  using Error::Error;
};

/// Diagnostics from the ring-spec parser. `kind` separates syntax, arity and
/// literal-validation failures.
class ParseError : public Error {
 public:
  enum class Kind { syntax, arity, literal };

  ParseError(Kind kind, std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {});

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace hurwitz

#endif  // HURWITZ_ERRORS_HPP
