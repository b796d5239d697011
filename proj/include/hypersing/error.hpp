#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypersing {

enum class ErrorCode {
  invalid_interval,
  invalid_size,
  x_outside_open_interval,
  quadrature_nonconvergence,
  missing_f,
  rhs_inconsistent,
  singular_matrix,
  nonfinite_rhs,
  size_limit_exceeded,
  kernel_evaluation_failure,
  kernel_lacks_antiderivative,
  tail_truncation_error,
  symbol_decay_violation,
  diagonal_evaluation,
  zero_singular_coefficient,
  invalid_parameter,
  not_square,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypersing
