#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lcx {

using Scalar = std::complex<double>;

enum class SpaceKind {
  kCoordinates,     // C^d
  kSampledFunction  // functions on [-K, K] stored at uniform grid points
};

/// Descriptor of a concrete locally convex space. Vectors refer to their
/// space by pointer; two descriptors with the same id are the same space.
class Space {
 public:
  static std::shared_ptr<const Space> coordinates(std::string id, std::size_t dim);
  /// Grid -K, -K + step, ..., K. `2K / step` must be an integer.
  static std::shared_ptr<const Space> sampledFunction(std::string id, double half_width,
                                                      double step);

  const std::string& id() const noexcept { return id_; }
  SpaceKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }

  // Sampled-function geometry. Meaningless for coordinate spaces.
  double halfWidth() const noexcept { return half_width_; }
  double step() const noexcept { return step_; }
  double gridPoint(std::size_t i) const;
  /// Grid indices whose points lie in [lo, hi] (inclusive, with a 1e-9 step slack).
  std::vector<std::size_t> gridIndicesIn(double lo, double hi) const;
  /// Linear interpolation weights for the point s: {(i, 1 - t), (i + 1, t)},
  /// zero weights dropped.
  std::vector<std::pair<std::size_t, double>> interpolationWeights(double s) const;

 private:
  Space(std::string id, SpaceKind kind, std::size_t dim, double half_width, double step);

  std::string id_;
  SpaceKind kind_;
  std::size_t dim_;
  double half_width_ = 0.0;
  double step_ = 0.0;
};

using SpacePtr = std::shared_ptr<const Space>;

bool sameSpace(const Space& a, const Space& b) noexcept;
/// Throws Error(kSpaceMismatch) naming both ids and `context`.
void requireSameSpace(const Space& a, const Space& b, const char* context);

/// An element of a concrete space: complex payload sized to the descriptor.
class Vector {
 public:
  /// Validates the payload size and that every entry is finite.
  Vector(SpacePtr space, std::vector<Scalar> data);

  static Vector zero(SpacePtr space);

  const SpacePtr& space() const noexcept { return space_; }
  std::span<const Scalar> data() const noexcept { return data_; }
  std::size_t size() const noexcept { return data_.size(); }
  const Scalar& operator[](std::size_t i) const { return data_[i]; }

  bool isZero() const noexcept;
  bool isFinite() const noexcept;
  /// Evaluate a sampled-function payload at s by linear interpolation.
  Scalar interpolate(double s) const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(Scalar factor) noexcept;

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Scalar factor, Vector v) { return v *= factor; }
  friend Vector operator-(Vector v) { return v *= Scalar{-1.0}; }

  /// Bitwise payload equality in the same space.
  friend bool operator==(const Vector& a, const Vector& b);

 private:
  struct Unchecked {};
  Vector(SpacePtr space, std::vector<Scalar> data, Unchecked) noexcept;

  SpacePtr space_;
  std::vector<Scalar> data_;
};

}  // namespace lcx
