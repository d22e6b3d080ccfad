#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcx/bochner.hpp"
#include "lcx/integrand.hpp"
#include "lcx/linear_map.hpp"
#include "lcx/measure.hpp"
#include "lcx/seminorm.hpp"
#include "lcx/space.hpp"

namespace lcx {

struct Caps {
  std::size_t max_iter = 4096;
  int quad_levels = 24;
  int base_level = 0;
  /// 0 means tol.
  double approx_tol = 0.0;
  /// 0 means family size + 8.
  std::size_t max_steps = 0;
};

/// A linear map together with the seminorm family of its target space.
struct MapEntry {
  LinearMap map;
  SeminormFamily target_family;
};

/// A validated problem description. `spec` is the canonical JSON form
/// (defaults filled in); parseProblem(p.spec).spec == p.spec.
struct Problem {
  std::string name;
  SpacePtr space;
  SeminormFamily family;
  MeasureSpace measure;
  IntegrandFn integrand;
  std::vector<LinearMap> dual;
  std::vector<MapEntry> maps;
  double tol = 1e-6;
  Caps caps;
  nlohmann::json expected;
  nlohmann::json spec;

  IntegrationOptions integrationOptions() const;
};

/// Throws SpecError naming the offending field, e.g. "measure.atoms[1].weight".
Problem parseProblem(const nlohmann::json& spec);
Problem loadProblem(const std::filesystem::path& path);

/// Seminorm descriptor {name, kind: sup|l1|functional, indices | range,
/// weights | coefficients} on V; `field` prefixes diagnostics.
Seminorm parseSeminorm(const nlohmann::json& j, const SpacePtr& V, const std::string& field);

}  // namespace lcx
