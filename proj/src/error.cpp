#include "majc/error.hpp"

namespace majc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::duplicate_vertex: return "duplicate_vertex";
    case ErrorCode::duplicate_edge: return "duplicate_edge";
    case ErrorCode::self_loop: return "self_loop";
    case ErrorCode::dangling_endpoint: return "dangling_endpoint";
    case ErrorCode::isolated_vertex: return "isolated_vertex";
    case ErrorCode::not_in_domain: return "not_in_domain";
    case ErrorCode::horizon_required: return "horizon_required";
    case ErrorCode::partial_colouring: return "partial_colouring";
    case ErrorCode::unknown_vertex: return "unknown_vertex";
    case ErrorCode::hypothesis_violated: return "hypothesis_violated";
    case ErrorCode::budget_exhausted: return "budget_exhausted";
    case ErrorCode::guard_exceeded: return "guard_exceeded";
    case ErrorCode::stalled_stream: return "stalled_stream";
    case ErrorCode::assertion_failed: return "assertion_failed";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace majc
