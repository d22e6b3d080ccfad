#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "lcx/measure.hpp"
#include "lcx/problem.hpp"
#include "lcx/simple_function.hpp"
#include "lcx/space.hpp"

namespace lcx {

struct RunOptions {
  /// Also run the oracle and compare against it and any expected values.
  bool verify = false;
  /// Attach per-step trials, D-set measures and the final approximant.
  bool trace = false;
  /// Seeds the randomized continuity-witness probes.
  std::uint64_t seed = 0;
  int oracle_resolution = 20;
};

/// Exit codes shared with the CLI.
enum ExitCode : int { kExitOk = 0, kExitSpec = 1, kExitCap = 2, kExitCertificate = 3 };

struct RunOutcome {
  nlohmann::json report;
  int exit_code = kExitOk;
};

/// Integrates the problem, certifies it, checks every dual functional and
/// map, and assembles the report. Deterministic for fixed inputs.
RunOutcome runProblem(const Problem& problem, const RunOptions& options = {});

enum class ReportFormat { kJson, kText };
std::string renderReport(const nlohmann::json& report, ReportFormat format);

nlohmann::json toJson(Scalar z);
nlohmann::json toJson(const Vector& v);
nlohmann::json toJson(const MeasurableSet& set);
/// Pieces as set descriptors plus vector payloads.
nlohmann::json toJson(const SimpleFn& s);

}  // namespace lcx
