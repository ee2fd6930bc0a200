#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrs {

/// Machine-readable failure categories. The CLI prints these verbatim.
enum class ErrorCode {
  invalid_argument,
  parse_error,
  zero_leading_coefficient,
  index_out_of_range,
  singular_system,
  precondition_failed,
  non_convergence,
  ambiguous_clustering,
  unknown_identity,
  insufficient_rows,
  non_integer,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lrs
