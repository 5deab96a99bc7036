#pragma once

#include <stdexcept>
#include <string>

namespace binkg {

/// Non-finite scalar input or an argument outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Vector lengths that must agree do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested operation has no closed form for this link (or updater).
class UnsupportedLinkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Root finding ran out of iterations.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration (policy/updater/link combination, budgets, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input data (CSV cells, shapes read from disk).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace binkg
