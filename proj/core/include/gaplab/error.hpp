#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaplab {

/// Failure classes shared by every module. The harness writes the class name
/// into error rows so summaries can report attrition per class.
enum class ErrorKind {
  invalid_parameter,
  undefined_domain,
  dimension_mismatch,
  resource_limit,
  convergence_failure,
  degenerate_dimension,
  unsupported_target,
  no_solution,
  empty_input,
  io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Raised by iterative methods that exhaust their budget. Carries the last
/// residual so callers can decide whether to fall back.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double residual)
      : Error(ErrorKind::convergence_failure, what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) throw Error(kind, what);
}

}  // namespace gaplab
