#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcx/linear_map.hpp"
#include "lcx/measure.hpp"
#include "lcx/space.hpp"

namespace lcx {

/// f: X -> V drawn from a fixed catalog. Evaluation always yields a finite
/// vector of the declared space; anything else throws.
///
/// Catalog ids (params in parentheses):
///   constant       (value)             f(x) = v
///   table          (values)            one vector per atom, discrete X only
///   circle         (frequency = 1)     f(x) = (cos wx, sin wx) in C^2
///   monomials      ()                  f(x)_i = x^(i+1), i = 0..d-1
///   gaussian-shift (width = 1)         f(t) = (s -> exp(-((s - t)/width)^2)), sampled V
/// Every entry accepts an optional "support": [lo, hi]; f vanishes for x
/// outside it.
class IntegrandFn {
 public:
  using Evaluator = std::function<Vector(const Point&)>;

  IntegrandFn(std::string catalog, nlohmann::json params, SpacePtr space, Evaluator eval);

  static IntegrandFn fromCatalog(const std::string& catalog, const nlohmann::json& params,
                                 const SpacePtr& V, const MeasureSpace& X);

  Vector operator()(const Point& pt) const;

  /// T o f, valued in T's target space.
  IntegrandFn composedWith(const LinearMap& T) const;

  const std::string& catalog() const noexcept { return catalog_; }
  const nlohmann::json& params() const noexcept { return params_; }
  const SpacePtr& space() const noexcept { return space_; }
  /// Names of maps applied after the catalog function, innermost first.
  const std::vector<std::string>& composition() const noexcept { return composition_; }

 private:
  std::string catalog_;
  nlohmann::json params_;
  SpacePtr space_;
  Evaluator eval_;
  std::vector<std::string> composition_;
};

/// Parses a JSON vector payload: numbers or [re, im] pairs.
std::vector<Scalar> parseScalars(const nlohmann::json& j, const std::string& field);

}  // namespace lcx
