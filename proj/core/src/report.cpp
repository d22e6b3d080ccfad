#include "lcx/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "lcx/bochner.hpp"
#include "lcx/checks.hpp"
#include "lcx/error.hpp"
#include "lcx/oracle.hpp"

namespace lcx {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxTracedPieces = 1024;

json stepJson(const StepSummary& s, bool trace) {
  json j = {{"chain_index", s.chain_index},
            {"seminorm", s.seminorm},
            {"n", s.n},
            {"delta", s.delta},
            {"level", s.level},
            {"centers", s.centers},
            {"pieces", s.pieces},
            {"eps", s.eps},
            {"residual", s.residual},
            {"disjoint", s.pairwise_disjoint},
            {"union_exact", s.union_exact},
            {"bound_ratio", s.max_bound_ratio},
            {"convex", s.convex ? json(*s.convex) : json(nullptr)}};
  if (trace) {
    json trials = json::array();
    for (const auto& [n, r] : s.trials) trials.push_back({{"n", n}, {"scaled_residual", r}});
    j["trials"] = std::move(trials);
    j["piece_measures"] = s.piece_measures;
  }
  return j;
}

bool constructionHolds(const IntegralResult& r) {
  return std::all_of(r.steps.begin(), r.steps.end(), [](const StepSummary& s) {
    return s.pairwise_disjoint && s.union_exact && s.max_bound_ratio <= 2.0 * (1.0 + 1e-12) &&
           s.residual < s.eps && s.convex.value_or(true);
  });
}

}  // namespace

json toJson(Scalar z) { return json::array({z.real(), z.imag()}); }

json toJson(const Vector& v) {
  json values = json::array();
  for (const auto& z : v.data()) values.push_back(toJson(z));
  return {{"space", v.space()->id()}, {"values", std::move(values)}};
}

json toJson(const MeasurableSet& set) {
  json j = {{"kind", set.kind() == SetKind::kAtoms ? "atoms" : "cells"},
            {"members", std::vector<std::size_t>(set.members().begin(), set.members().end())}};
  if (set.kind() == SetKind::kCells) j["level"] = set.level();
  return j;
}

json toJson(const SimpleFn& s) {
  json pieces = json::array();
  for (const auto& p : s.pieces()) pieces.push_back({{"set", toJson(p.set)}, {"value", toJson(p.value)}});
  return {{"space", s.space()->id()}, {"pieces", std::move(pieces)}};
}

RunOutcome runProblem(const Problem& problem, const RunOptions& options) {
  const IntegrandFn& f = problem.integrand;
  const MeasureSpace& X = problem.measure;
  const SeminormFamily& family = problem.family;
  IntegrationOptions io = problem.integrationOptions();
  io.keep_approximants = options.trace;

  const IntegralResult result = bochnerIntegrate(f, X, family, io);
  const bool converged = result.status == Status::kConverged;
  bool pass = converged;

  json report;
  report["problem"] = problem.name;
  report["settings"] = {{"tol", io.tol},
                        {"approx_tol", io.approx_tol > 0.0 ? io.approx_tol : io.tol},
                        {"max_iter", io.max_iter},
                        {"quad_levels", io.quad_levels},
                        {"base_level", io.base_level}};
  report["status"] = toString(result.status);
  if (!result.message.empty()) report["message"] = result.message;
  report["hypothesis_used"] = toString(result.hypothesis);
  report["integral"] = toJson(result.integral);

  json certs = json::array();
  for (const auto& c : result.certificates) {
    certs.push_back({{"seminorm", c.seminorm},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs},
                     {"rhs_converged", c.rhs_converged},
                     {"pass", c.pass}});
    pass = pass && c.pass;
  }
  report["certificates"] = std::move(certs);

  json trace = json::array();
  for (const auto& r : result.cauchy_trace) {
    trace.push_back({{"n", r.n},
                     {"chain_index", r.chain_index},
                     {"eps", r.eps},
                     {"residual", r.residual},
                     {"increment", r.increment},
                     {"bound", r.bound},
                     {"top_increment", r.top_increment},
                     {"estimate_holds", r.estimate_holds}});
  }
  report["cauchy_trace"] = std::move(trace);
  pass = pass && result.cauchyHolds();

  json steps = json::array();
  for (const auto& s : result.steps) steps.push_back(stepJson(s, options.trace));
  report["steps"] = std::move(steps);
  const bool construction = constructionHolds(result);
  report["construction_ok"] = construction;
  pass = pass && construction;

  const int level = result.steps.empty() ? 0 : result.steps.back().level;
  const IntegralBound ib = isIntegrallyBounded(f, X, family, io.tol * 1e-2, io.quad_levels);
  const EssentialBound eb = isEssentiallyBounded(f, X, family, level);
  std::optional<bool> convex;
  for (const auto& s : result.steps) {
    if (s.convex) convex = convex.value_or(true) && *s.convex;
  }
  report["predicates"] = {{"integrally_bounded", toString(ib.holds)},
                          {"integral_values", ib.values},
                          {"essentially_bounded", eb.holds},
                          {"essential_sup", eb.sup},
                          {"convex_hull", convex ? json(*convex) : json(nullptr)},
                          {"separates_points", family.separatesPoints()}};

  json functionals = json::array();
  for (const auto& alpha : problem.dual) {
    const FunctionalReport fr = functionalCheck(alpha, f, X, result.integral, io.tol, io.quad_levels);
    functionals.push_back({{"name", fr.functional},
                           {"of_integral", toJson(fr.of_integral)},
                           {"integral_of", toJson(fr.integral_of)},
                           {"delta", fr.delta},
                           {"pass", fr.pass}});
    pass = pass && fr.pass;
  }
  report["functionals"] = std::move(functionals);

  json maps = json::array();
  for (std::size_t i = 0; i < problem.maps.size(); ++i) {
    const MapEntry& m = problem.maps[i];
    const PushforwardReport pr = pushforwardCheck(m.map, f, X, result.integral, m.target_family,
                                                  io, options.seed + i);
    json entries = json::array();
    for (const auto& e : pr.entries) {
      entries.push_back({{"seminorm", e.seminorm}, {"delta", e.delta}, {"pass", e.pass}});
    }
    json witnesses = json::array();
    for (const auto& w : pr.witnesses) {
      witnesses.push_back({{"target", w.target},
                           {"source", w.source},
                           {"declared", w.declared},
                           {"worst_gap", w.worst_gap},
                           {"holds", w.holds}});
    }
    maps.push_back({{"name", pr.map},
                    {"image_of_integral", toJson(pr.image_of_integral)},
                    {"integral_of_image", toJson(pr.integral_of_image)},
                    {"status", toString(pr.status)},
                    {"entries", std::move(entries)},
                    {"witnesses", std::move(witnesses)},
                    {"pass", pr.pass}});
    pass = pass && pr.pass;
  }
  report["maps"] = std::move(maps);

  if (options.verify) {
    const Vector oracle = oracleIntegrate(f, X, options.oracle_resolution);
    json deltas = json::array();
    bool vpass = true;
    for (const auto& p : family.members()) {
      const double d = p.distance(result.integral, oracle);
      deltas.push_back({{"seminorm", p.name()}, {"delta", d}, {"pass", d <= io.tol}});
      vpass = vpass && d <= io.tol;
    }
    json v = {{"oracle", toJson(oracle)},
              {"oracle_resolution", X.isDiscrete() ? json(nullptr) : json(options.oracle_resolution)},
              {"exact", X.isDiscrete() ? json(result.integral == oracle) : json(nullptr)},
              {"deltas", std::move(deltas)}};
    if (problem.expected.contains("integral")) {
      const Vector expected(problem.space,
                            parseScalars(problem.expected["integral"], "expected.integral"));
      json ed = json::array();
      for (const auto& p : family.members()) {
        const double d = p.distance(result.integral, expected);
        ed.push_back({{"seminorm", p.name()}, {"delta", d}, {"pass", d <= io.tol}});
        vpass = vpass && d <= io.tol;
      }
      v["expected"] = {{"source", problem.expected.value("source", "")}, {"deltas", std::move(ed)}};
    }
    v["pass"] = vpass;
    report["verification"] = std::move(v);
    pass = pass && vpass;
  }

  if (options.trace && !result.approximants.empty()) {
    const SimpleFn& last = result.approximants.back();
    report["trace"] = last.pieces().size() <= kMaxTracedPieces
                          ? json{{"approximant", toJson(last)}}
                          : json{{"approximant_pieces", last.pieces().size()}};
  }

  report["pass"] = pass;
  const int code = !converged ? kExitCap : (pass ? kExitOk : kExitCertificate);
  return RunOutcome{std::move(report), code};
}

std::string renderReport(const json& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return report.dump(2) + "\n";
  std::ostringstream out;
  out << "problem " << report.value("problem", "") << ": " << report.value("status", "")
      << (report.value("pass", false) ? " PASS" : " FAIL") << "\n";
  if (report.contains("message")) out << "  " << report["message"].get<std::string>() << "\n";
  out << "  hypothesis " << report.value("hypothesis_used", "") << "\n";
  out << "  integral";
  char buf[96];
  for (const auto& z : report["integral"]["values"]) {
    std::snprintf(buf, sizeof buf, " (%.12g, %.12g)", z[0].get<double>(), z[1].get<double>());
    out << buf;
  }
  out << "\n";
  for (const auto& c : report["certificates"]) {
    std::snprintf(buf, sizeof buf, "p(I) = %.10g <= %.10g", c["lhs"].get<double>(),
                  c["rhs"].get<double>());
    out << "  certificate " << c["seminorm"].get<std::string>() << ": " << buf
        << (c["pass"].get<bool>() ? " ok" : " FAIL") << "\n";
  }
  for (const auto& fn : report["functionals"]) {
    std::snprintf(buf, sizeof buf, "%.3g", fn["delta"].get<double>());
    out << "  functional " << fn["name"].get<std::string>() << ": delta " << buf
        << (fn["pass"].get<bool>() ? " ok" : " FAIL") << "\n";
  }
  for (const auto& m : report["maps"]) {
    double worst = 0.0;
    for (const auto& e : m["entries"]) worst = std::max(worst, e["delta"].get<double>());
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    out << "  map " << m["name"].get<std::string>() << ": delta " << buf
        << (m["pass"].get<bool>() ? " ok" : " FAIL") << "\n";
  }
  if (report.contains("verification")) {
    const auto& v = report["verification"];
    double worst = 0.0;
    for (const auto& d : v["deltas"]) worst = std::max(worst, d["delta"].get<double>());
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    out << "  oracle: max delta " << buf << (v["pass"].get<bool>() ? " ok" : " FAIL") << "\n";
  }
  out << "  steps " << report["steps"].size() << ", construction "
      << (report.value("construction_ok", false) ? "ok" : "FAIL") << "\n";
  return out.str();
}

}  // namespace lcx
