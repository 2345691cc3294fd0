#pragma once

#include <stdexcept>
#include <string>

namespace freeid {

/// Argument outside the real domain a special function is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature ran out of subdivisions before meeting tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double best_estimate, double est_error)
      : std::runtime_error(what), best_estimate_(best_estimate), est_error_(est_error) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double est_error() const noexcept { return est_error_; }

 private:
  double best_estimate_;
  double est_error_;
};

/// An integrand or transform produced NaN or infinity.
class NonFinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownDistribution : public std::invalid_argument {
 public:
  explicit UnknownDistribution(const std::string& name)
      : std::invalid_argument("unknown distribution: " + name), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class NoClosedForm : public std::invalid_argument {
 public:
  explicit NoClosedForm(const std::string& name)
      : std::invalid_argument("no closed-form Voiculescu transform for: " + name) {}
};

class UnknownIdentity : public std::invalid_argument {
 public:
  explicit UnknownIdentity(const std::string& id)
      : std::invalid_argument("unknown table identity: " + id) {}
};

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& suite)
      : std::invalid_argument("unknown verification suite: " + suite) {}
};

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace freeid
