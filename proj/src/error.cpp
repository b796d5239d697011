#include "hypersing/error.hpp"

namespace hypersing {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_interval: return "invalid-interval";
    case ErrorCode::invalid_size: return "invalid-size";
    case ErrorCode::x_outside_open_interval: return "x-outside-open-interval";
    case ErrorCode::quadrature_nonconvergence: return "quadrature-nonconvergence";
    case ErrorCode::missing_f: return "missing-f";
    case ErrorCode::rhs_inconsistent: return "rhs-inconsistent";
    case ErrorCode::singular_matrix: return "singular-matrix";
    case ErrorCode::nonfinite_rhs: return "nonfinite-rhs";
    case ErrorCode::size_limit_exceeded: return "size-limit-exceeded";
    case ErrorCode::kernel_evaluation_failure: return "kernel-evaluation-failure";
    case ErrorCode::kernel_lacks_antiderivative: return "kernel-lacks-antiderivative";
    case ErrorCode::tail_truncation_error: return "tail-truncation-error-exceeds-tolerance";
    case ErrorCode::symbol_decay_violation: return "symbol-decay-violation";
    case ErrorCode::diagonal_evaluation: return "diagonal-evaluation";
    case ErrorCode::zero_singular_coefficient: return "zero-singular-coefficient";
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::not_square: return "not-square";
  }
  return "unknown";
}

}  // namespace hypersing
