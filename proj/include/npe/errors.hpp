#pragma once
#include <stdexcept>
#include <string>

namespace npe {

enum class ErrorKind {
  InvalidArgument,    // bad exponent, bad time, arity mismatch, ...
  DomainViolation,    // point outside the closed domain
  Truncation,         // series truncation insufficient for requested accuracy
  SolverFailure,      // linear solver did not reach its tolerance
  PositivityViolation,// scheme produced a negative concentration (bug, not data)
  Validation,         // violated type/config invariant
  Parse,              // malformed configuration text
  InapplicableCheck   // check called on a configuration it does not cover
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg, double detail = 0.0)
      : std::runtime_error(msg), kind_(kind), detail_(detail) {}
  ErrorKind kind() const noexcept { return kind_; }
  // kind-specific payload: final residual for SolverFailure, tail estimate
  // for Truncation, offending value for PositivityViolation
  double detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  double detail_;
};

} // namespace npe
