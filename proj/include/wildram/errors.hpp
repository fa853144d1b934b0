#pragma once

#include <stdexcept>
#include <string>

namespace wildram {

// Base for everything the library throws on purpose. `kind()` is the
// machine-readable tag that ends up in JSON error payloads.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

// Input could not be parsed (series literal, JSON document, subspace basis).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error("Parse", msg) {}
};

// Mathematically invalid request: division by zero, invalid tower,
// split/inert right-hand side where a ramified one is required, etc.
class DomainError : public Error {
public:
  DomainError(std::string kind, const std::string& msg)
      : Error(std::move(kind), msg) {}
  explicit DomainError(const std::string& msg) : Error("Domain", msg) {}
};

class DivisionByZero : public DomainError {
public:
  explicit DivisionByZero(const std::string& msg = "division by zero")
      : DomainError("DivisionByZero", msg) {}
};

// The truncation window was too small to decide the requested quantity.
// `suggested_window` is a retry hint (coefficients past the lead).
class PrecisionExhausted : public Error {
public:
  PrecisionExhausted(const std::string& msg, long suggested)
      : Error("PrecisionExhausted", msg), suggested_window(suggested) {}
  long suggested_window;
};

// The uniformizer chain hit the residue-split obstruction: the normalizing
// constant a_j landed in the prime field, so the next step would create a
// residue extension instead of a totally ramified one.
class ResidueSplit : public DomainError {
public:
  ResidueSplit(int level, int generator, const std::string& constant_repr)
      : DomainError("ResidueSplit",
                    "residue-split obstruction at level " + std::to_string(level) +
                        ", generator " + std::to_string(generator) +
                        " (a_j = " + constant_repr + " lies in the prime field)"),
        level(level), generator(generator), constant(constant_repr) {}
  int level;
  int generator;
  std::string constant;
};

class PreconditionFailed : public DomainError {
public:
  explicit PreconditionFailed(const std::string& msg)
      : DomainError("Precondition", msg) {}
};

class NonIntegralGenus : public DomainError {
public:
  explicit NonIntegralGenus(const std::string& msg)
      : DomainError("NonIntegralGenus", msg) {}
};

class NegativeGenus : public DomainError {
public:
  explicit NegativeGenus(const std::string& msg)
      : DomainError("NegativeGenus", msg) {}
};

// Internal consistency failure (an invariant the library maintains was
// violated). Indicates a bug or an unmodelled precision effect.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& msg) : Error("Internal", msg) {}
};

}  // namespace wildram
