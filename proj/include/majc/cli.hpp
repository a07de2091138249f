#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "majc/io.hpp"

namespace majc {

enum ExitCode : int { kExitOk = 0, kExitVerification = 1, kExitUsage = 2, kExitIo = 3 };

struct RunReport {
  std::vector<std::string> command;  // argv without the program name
  std::string subcommand;
  Json config;                       // options, with input files inlined
  std::string config_hash;           // FNV-1a 64 over subcommand + config
  Json outputs;
  std::vector<std::string> artifacts;
  double elapsed_ms = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  int exit_code = kExitOk;
  std::string error;  // set when the run stopped with an error
  std::string usage;  // help text for usage errors

  Json to_json() const;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t h);

/// Parses and runs one subcommand. Never throws; failures are reported via
/// exit_code and error.
RunReport dispatch(const std::vector<std::string>& args);

}  // namespace majc
