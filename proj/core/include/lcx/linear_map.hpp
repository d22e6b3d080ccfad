#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lcx/seminorm.hpp"
#include "lcx/space.hpp"

namespace lcx {

/// v -> (v_{i_1}, ..., v_{i_k}) on a coordinate space.
struct CoordinateProjection {
  std::vector<std::size_t> indices;
};
/// Sampled function -> coordinate vector of its samples at the given grid indices.
struct SubgridTruncation {
  std::vector<std::size_t> indices;
};
/// v -> v(at): interpolated for sampled spaces, coordinate `at` otherwise.
struct PointEvaluation {
  double at = 0.0;
};
/// Row-major complex matrix acting on coordinates.
struct MatrixAction {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> entries;
};
/// v -> sum_i w_i v_i.
struct WeightedIntegration {
  std::vector<Scalar> weights;
};

using LinearAction = std::variant<CoordinateProjection, SubgridTruncation, PointEvaluation,
                                  MatrixAction, WeightedIntegration>;

/// One target coordinate written as a functional on the source payload.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Continuous linear map between concrete spaces. Every action is realised
/// as a sparse matrix over the payloads; rows are applied in ascending order.
///
/// Each map carries continuity witnesses: for a target seminorm q a source
/// seminorm p with q(T v) <= p(v). Witnesses may be declared by name; any
/// undeclared q falls back to the pullback witness, which is valid by
/// construction.
class LinearMap {
 public:
  LinearMap(std::string name, SpacePtr source, SpacePtr target, LinearAction action);

  Vector operator()(const Vector& v) const;
  /// Scalar value of a map into a one-dimensional space.
  Scalar functional(const Vector& v) const;

  const std::string& name() const noexcept { return name_; }
  const SpacePtr& source() const noexcept { return source_; }
  const SpacePtr& target() const noexcept { return target_; }
  const LinearAction& action() const noexcept { return action_; }
  std::span<const SparseRow> rows() const noexcept { return rows_; }
  bool isFunctional() const noexcept { return target_->dim() == 1; }

  LinearMap withWitness(const std::string& target_seminorm, Seminorm source_seminorm) const;
  bool hasDeclaredWitness(const std::string& target_seminorm) const;
  Seminorm witness(const Seminorm& q) const;

 private:
  std::string name_;
  SpacePtr source_;
  SpacePtr target_;
  LinearAction action_;
  std::vector<SparseRow> rows_;
  std::map<std::string, Seminorm> witnesses_;
};

Vector applyLinear(const LinearMap& T, const Vector& v);

/// Smallest representable source seminorm dominating q o T: exact for sup
/// and functional terms, and the column-weighted l1 bound for l1 terms.
Seminorm pullbackWitness(const LinearMap& T, const Seminorm& q);

/// One-dimensional target space shared by every functional.
SpacePtr scalarSpace();

}  // namespace lcx
