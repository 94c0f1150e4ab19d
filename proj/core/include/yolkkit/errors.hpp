#pragma once

#include <stdexcept>
#include <string>

namespace yolkkit {

enum class ErrorCode {
  zero_normal,
  dimension_mismatch,
  coincident_points,
  pivot_not_on_hyperplane,
  empty_electorate,
  unsupported_dimension,
  empty_constraint_set,
  no_second_point,
  not_tangent,
  no_cover,
  invalid_params,
  degenerate_denominator,
  insufficient_tangents,
  invalid_parameter,
  convergence_failure,
  parse_error,
};

/// All recoverable failures in the library throw this (or a subclass that
/// carries extra payload, see ConvergenceError / ParseError).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace yolkkit
