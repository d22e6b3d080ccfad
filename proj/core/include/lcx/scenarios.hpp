#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace lcx {

/// Built-in problem specs: constant-prob, cancellation, circle, frechet-gauss,
/// sequence-space, simple-replay. The files under scenarios/ are exports of
/// this list.
std::vector<nlohmann::json> listScenarios();
std::optional<nlohmann::json> findScenario(std::string_view name);

/// Seeded random problem on a discrete probability space: at most 20 atoms
/// (some of weight 0), at most 4 seminorms, dimension at most 8. All weights
/// and values are dyadic, so every weighted sum is exact in double precision.
nlohmann::json randomDiscreteProblem(std::uint64_t seed);

}  // namespace lcx
