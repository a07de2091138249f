#include <iostream>

#include "majc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  majc::RunReport report = majc::dispatch(args);
  if (!report.usage.empty() && report.exit_code == majc::kExitOk) {
    std::cout << report.usage;
    return majc::kExitOk;
  }
  if (report.exit_code == majc::kExitUsage && report.subcommand.empty()) {
    std::cerr << "majc: " << report.error << "\n\n" << report.usage;
    return report.exit_code;
  }
  if (!report.error.empty()) std::cerr << "majc: " << report.error << "\n";
  std::cout << report.to_json().dump(2) << "\n";
  return report.exit_code;
}
