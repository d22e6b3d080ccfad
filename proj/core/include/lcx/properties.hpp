#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcx/measure.hpp"
#include "lcx/simple_function.hpp"
#include "lcx/space.hpp"

namespace lcx {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Seeded randomized checks of the library's invariants. Case i of every
/// property uses seed + i, so a failure names a reproducible seed.
std::vector<PropertyResult> runPropertySuite(std::size_t cases, std::uint64_t seed = 1);

/// Random vector with entries uniform in [-scale, scale]^2.
Vector randomVector(std::mt19937_64& rng, const SpacePtr& V, double scale = 1.0);

/// Random simple function on a discrete X: every atom goes to one of up to
/// `max_pieces` pieces or stays outside all of them.
SimpleFn randomSimpleFn(std::mt19937_64& rng, const MeasureSpace& X, const SpacePtr& V,
                        std::size_t max_pieces = 5);

/// Largest absolute difference between numeric leaves of two reports;
/// +infinity when their structure or non-numeric leaves differ.
double maxReportDifference(const nlohmann::json& a, const nlohmann::json& b);

/// The same problem with f changed arbitrarily on weight-0 atoms. Needs a
/// table integrand on a discrete measure.
nlohmann::json perturbNullAtoms(const nlohmann::json& spec, std::uint64_t seed);

}  // namespace lcx
