#include "lrs/error.hpp"

namespace lrs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::zero_leading_coefficient: return "zero_leading_coefficient";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::singular_system: return "singular_system";
    case ErrorCode::precondition_failed: return "precondition_failed";
    case ErrorCode::non_convergence: return "non_convergence";
    case ErrorCode::ambiguous_clustering: return "ambiguous_clustering";
    case ErrorCode::unknown_identity: return "unknown_identity";
    case ErrorCode::insufficient_rows: return "insufficient_rows";
    case ErrorCode::non_integer: return "non_integer";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace lrs
