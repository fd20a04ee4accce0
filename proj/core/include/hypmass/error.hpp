#pragma once

#include <stdexcept>
#include <string>

namespace hypmass {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad radius, empty band, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Configuration or input file could not be parsed or failed validation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}

  [[nodiscard]] double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

/// The ODE integrator could not continue (step size underflow).
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double failing_r)
      : Error(what), failing_r_(failing_r) {}

  [[nodiscard]] double failing_r() const noexcept { return failing_r_; }

 private:
  double failing_r_;
};

}  // namespace hypmass
