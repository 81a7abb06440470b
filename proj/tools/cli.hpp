#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "orcd/rates.hpp"

namespace orcd::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kSolver = 3, kIo = 4 };

struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  std::size_t steps = 201;
};

/// Parses `start:stop:steps`; steps must be at least 2.
GridSpec parse_grid(const std::string& text);

struct RunConfig {
  std::string command;
  std::optional<std::string> model_path;
  std::optional<std::string> output_path;  // stdout when absent
  std::string format = "csv";
  std::optional<GridSpec> grid;
  std::optional<std::string> param;
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  std::optional<double> r1, p_z, power;
};

RateCurve run_fig4(const RunConfig& cfg);
RateCurve run_fig6(const RunConfig& cfg);
RateCurve run_fig7(const RunConfig& cfg);

/// Prints `failure` to `err` and maps it to an exit code. Rethrows anything
/// that is not one of the library's error types.
int report_failure(std::exception_ptr failure, std::ostream& err);

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orcd::cli
