#include "gaplab/error.hpp"

namespace gaplab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::undefined_domain: return "undefined-domain";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::convergence_failure: return "convergence-failure";
    case ErrorKind::degenerate_dimension: return "degenerate-dimension";
    case ErrorKind::unsupported_target: return "unsupported-target";
    case ErrorKind::no_solution: return "no-solution";
    case ErrorKind::empty_input: return "empty-input";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace gaplab
