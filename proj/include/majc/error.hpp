#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace majc {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  duplicate_vertex,
  duplicate_edge,
  self_loop,
  dangling_endpoint,
  isolated_vertex,
  not_in_domain,
  horizon_required,
  partial_colouring,
  unknown_vertex,
  hypothesis_violated,
  budget_exhausted,
  guard_exceeded,
  stalled_stream,
  assertion_failed,
  io_error,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code. Every library failure uses it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Internal consistency check that stays on in release builds.
#define MAJC_CHECK(cond, msg)                                          \
  do {                                                                 \
    if (!(cond))                                                       \
      throw ::majc::Error(::majc::ErrorCode::assertion_failed, (msg)); \
  } while (0)

}  // namespace majc
