#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace daha {

/// Base of every error raised by the library. `kind()` is a stable short tag
/// used by the CLI when it serializes failures.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ConfigurationError : public Error {
 public:
  explicit ConfigurationError(const std::string& w) : Error("configuration", w) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& w) : Error("domain", w) {}
};

class ArithmeticError : public Error {
 public:
  explicit ArithmeticError(const std::string& w) : Error("arithmetic", w) {}
};

/// A result left the class of binomial-factored denominators.
class RepresentationError : public Error {
 public:
  explicit RepresentationError(const std::string& w) : Error("representation", w) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& w) : Error("capacity", w) {}
};

class UnsupportedLocusError : public Error {
 public:
  explicit UnsupportedLocusError(const std::string& w) : Error("unsupported-locus", w) {}
};

class ExpansionDomainError : public Error {
 public:
  explicit ExpansionDomainError(const std::string& w) : Error("expansion-domain", w) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& w) : Error("parse", w) {}
};

class HigherOrderPoleError : public Error {
 public:
  HigherOrderPoleError(std::int64_t order, const std::string& w)
      : Error("higher-order-pole", w), order_(order) {}
  /// The (negative) vanishing order that was found.
  std::int64_t order() const noexcept { return order_; }

 private:
  std::int64_t order_;
};

}  // namespace daha
