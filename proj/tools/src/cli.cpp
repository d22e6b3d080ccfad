#include "lcx_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"
#include "lcx/error.hpp"
#include "lcx/problem.hpp"
#include "lcx/properties.hpp"
#include "lcx/report.hpp"
#include "lcx/scenarios.hpp"

namespace lcx::cli {
namespace {

namespace fs = std::filesystem;

struct RunFlags {
  std::string spec;
  std::optional<double> tol;
  std::optional<std::size_t> max_iter;
  std::optional<int> quad_levels;
  bool verify = false;
  bool trace = false;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string report_dir;
};

void addRunFlags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("spec", f.spec, "Problem spec JSON file, or the name of a built-in scenario")
      ->required();
  cmd->add_option("--tol", f.tol, "Convergence and certificate tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", f.max_iter, "Largest approximant index n")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--quad-levels", f.quad_levels, "Quadrature refinement cap")
      ->check(CLI::Range(1, 30));
  cmd->add_flag("--verify", f.verify, "Compare against the oracle and expected values");
  cmd->add_flag("--trace", f.trace, "Include per-step trials, D-set measures and the approximant");
  cmd->add_option("--seed", f.seed, "Seed for randomized witness probes");
  cmd->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--report-dir", f.report_dir, "Also write the report into this directory");
}

nlohmann::json loadSpec(const std::string& spec) {
  if (fs::exists(spec)) {
    std::ifstream in(spec);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw SpecError("", std::string("malformed JSON: ") + e.what());
    }
    return j;
  }
  if (auto builtin = findScenario(spec)) return *builtin;
  throw SpecError("", "cannot open " + spec);
}

void writeAtomically(const fs::path& dir, const std::string& name, const std::string& content) {
  fs::create_directories(dir);
  const fs::path target = dir / name;
  const fs::path tmp = dir / ("." + name + "." + std::to_string(::getpid()) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string fileStem(const std::string& name) {
  std::string s = name;
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '/' || c == '\\'; }, '_');
  return s;
}

int runSpec(const RunFlags& f, bool verify, Context& ctx) {
  Problem pr = parseProblem(loadSpec(f.spec));
  if (f.tol) pr.tol = *f.tol;
  if (f.max_iter) pr.caps.max_iter = *f.max_iter;
  if (f.quad_levels) pr.caps.quad_levels = *f.quad_levels;
  RunOptions ro;
  ro.verify = verify || f.verify;
  ro.trace = f.trace;
  ro.seed = f.seed;
  const RunOutcome outcome = runProblem(pr, ro);
  const ReportFormat format = f.format == "text" ? ReportFormat::kText : ReportFormat::kJson;
  const std::string rendered = renderReport(outcome.report, format);
  ctx.out << rendered;
  const std::string dir = ctx.report_dir_env.value_or(f.report_dir);
  if (!dir.empty()) {
    writeAtomically(dir, fileStem(pr.name) + (format == ReportFormat::kText ? ".txt" : ".json"),
                    rendered);
  }
  return outcome.exit_code;
}

int runScenarioSuite(Context& ctx) {
  int worst = kExitOk;
  for (const auto& spec : listScenarios()) {
    RunOptions ro;
    ro.verify = true;
    const RunOutcome outcome = runProblem(parseProblem(spec), ro);
    ctx.out << (outcome.exit_code == kExitOk ? "PASS " : "FAIL ") << spec["name"].get<std::string>()
            << " (exit " << outcome.exit_code << ")\n";
    worst = std::max(worst, outcome.exit_code);
  }
  return worst;
}

int runPropertiesSuite(std::size_t cases, std::uint64_t seed, Context& ctx) {
  bool ok = true;
  for (const auto& r : runPropertySuite(cases, seed)) {
    ctx.out << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << " " << (r.cases - r.failures)
            << "/" << r.cases;
    if (r.failures > 0) ctx.out << " first failure: " << r.first_failure;
    ctx.out << "\n";
    ok = ok && r.failures == 0;
  }
  return ok ? kExitOk : kExitCertificate;
}

}  // namespace

int runCli(const std::vector<std::string>& args, Context& ctx) {
  CLI::App app{"Bochner integrals in locally convex spaces", "lcx"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "Integrate a problem and print the report");
  addRunFlags(run, run_flags);

  RunFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Run the engine and the oracle, report deltas");
  addRunFlags(verify, verify_flags);

  std::string suite_name;
  std::size_t cases = 100;
  std::uint64_t suite_seed = 1;
  auto* suite = app.add_subcommand("suite", "Run the 'scenarios' or 'properties' suite");
  suite->add_option("name", suite_name, "Suite name")->required();
  suite->add_option("--cases", cases, "Cases per property")->check(CLI::PositiveNumber);
  suite->add_option("--seed", suite_seed, "First seed of the property suite");

  auto* list = app.add_subcommand("list", "List built-in scenarios");

  std::string export_dir;
  auto* exporter = app.add_subcommand("export", "Write built-in scenarios as JSON files");
  exporter->add_option("dir", export_dir, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, ctx.out, ctx.err);
    return code == 0 ? kExitOk : kExitSpec;
  }

  try {
    if (run->parsed()) return runSpec(run_flags, false, ctx);
    if (verify->parsed()) return runSpec(verify_flags, true, ctx);
    if (suite->parsed()) {
      if (suite_name == "scenarios") return runScenarioSuite(ctx);
      if (suite_name == "properties") return runPropertiesSuite(cases, suite_seed, ctx);
      ctx.err << "lcx: unknown suite '" << suite_name << "' (expected scenarios or properties)\n";
      return kExitSpec;
    }
    if (list->parsed()) {
      for (const auto& s : listScenarios()) ctx.out << s["name"].get<std::string>() << "\n";
      return kExitOk;
    }
    if (exporter->parsed()) {
      for (const auto& s : listScenarios()) {
        writeAtomically(export_dir, s["name"].get<std::string>() + ".json", s.dump(2) + "\n");
      }
      return kExitOk;
    }
  } catch (const SpecError& e) {
    ctx.err << "lcx: spec error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const CapReachedError& e) {
    ctx.err << "lcx: cap reached: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    ctx.err << "lcx: error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const std::exception& e) {
    ctx.err << "lcx: " << e.what() << "\n";
    return kExitSpec;
  }
  return kExitSpec;
}

}  // namespace lcx::cli
