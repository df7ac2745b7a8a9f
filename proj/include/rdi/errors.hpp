#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A function was evaluated outside its domain (arcsin of |x| > 1, log of x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// det(Psi) vanishes: Majorana, Weyl and flag-dipole spinors cannot be inverted.
class SingularStateError : public Error {
 public:
  using Error::Error;
};

/// A scenario parameter violates its precondition (superluminal motion, |f'| > 1, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The requested dynamics cannot be produced by the allowed interaction.
class NonPhysicalDynamicsError : public Error {
 public:
  NonPhysicalDynamicsError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class ZeroDensityError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed expression; `offset` is the byte position of the offending token.
class SyntaxError : public ConfigError {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : ConfigError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownIdentifierError : public SyntaxError {
 public:
  UnknownIdentifierError(const std::string& name, std::size_t offset)
      : SyntaxError("unknown identifier '" + name + "'", offset), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// An expression was evaluated without a value for one of its identifiers.
class UnboundIdentifierError : public Error {
 public:
  explicit UnboundIdentifierError(const std::string& name)
      : Error("no value bound to '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace rdi
