#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

enum class ErrorKind {
  invalid_dimension,
  numerical_consistency,
  convergence,
  domain,
  config,
  io,
};

/// Base class for every error thrown by the library. `kind()` lets callers
/// (the CLI in particular) map failures onto exit codes without RTTI chains.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidDimensionError : public Error {
 public:
  explicit InvalidDimensionError(const std::string& what)
      : Error(ErrorKind::invalid_dimension, what) {}
};

class NumericalConsistencyError : public Error {
 public:
  explicit NumericalConsistencyError(const std::string& what)
      : Error(ErrorKind::numerical_consistency, what) {}
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double off_diagonal_norm)
      : Error(ErrorKind::convergence, what),
        off_diagonal_norm_(off_diagonal_norm) {}

  double off_diagonal_norm() const noexcept { return off_diagonal_norm_; }

 private:
  double off_diagonal_norm_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::domain, what) {}
};

class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(ErrorKind::config, field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

}  // namespace wigner
