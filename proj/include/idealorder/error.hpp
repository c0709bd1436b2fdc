#pragma once

#include <stdexcept>
#include <string>

namespace idealorder {

// Base of every error the library raises. Each subclass corresponds to one
// failure kind callers are expected to distinguish.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Parts handed to Hensel lifting share a factor modulo p.
class NotCoprime : public Error {
 public:
  using Error::Error;
};

// Two factors of equal degree have identical digit keys at precision k.
class NeedsMorePrecision : public Error {
 public:
  NeedsMorePrecision(unsigned precision, std::string what)
      : Error(std::move(what)), precision_(precision) {}
  unsigned precision() const { return precision_; }

 private:
  unsigned precision_;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

// Data that only a fixture can supply (prime blocks, p-adic factors, tau).
class FixtureRequired : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  ValidationError(std::string check, std::string what)
      : Error(std::move(what)), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

// The Dedekind-Kummer route was requested for a prime dividing disc(g).
class WrongPath : public Error {
 public:
  using Error::Error;
};

class NoSuchIdeal : public Error {
 public:
  using Error::Error;
};

}  // namespace idealorder
