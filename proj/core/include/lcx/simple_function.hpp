#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lcx/measure.hpp"
#include "lcx/seminorm.hpp"
#include "lcx/space.hpp"

namespace lcx {

struct Piece {
  MeasurableSet set;
  Vector value;
};

/// s = sum_j 1_{A_j} v_j with pairwise disjoint A_j. Pieces are normalised on
/// construction: empty sets are dropped, cell sets are refined to a common
/// level, and equal vectors are kept as separate pieces.
class SimpleFn {
 public:
  SimpleFn(const MeasureSpace& X, SpacePtr V, std::vector<Piece> pieces);
  static SimpleFn zero(const MeasureSpace& X, SpacePtr V);

  std::span<const Piece> pieces() const noexcept { return pieces_; }
  const SpacePtr& space() const noexcept { return space_; }
  bool onAtoms() const noexcept { return discrete_; }
  /// Common refinement level of the cell pieces (0 on atoms).
  int level() const noexcept { return level_; }

  /// Index of the piece containing the point, or -1 when s vanishes there.
  std::ptrdiff_t pieceAt(const Point& pt) const;
  Vector operator()(const Point& pt) const;

  /// True when both functions live on the same X geometry.
  bool sameDomain(const SimpleFn& other) const noexcept;

 private:
  std::size_t slotOf(const Point& pt) const;

  bool discrete_ = true;
  std::size_t atom_count_ = 0;
  double a_ = 0.0;
  double b_ = 0.0;
  std::size_t base_cells_ = 0;
  int level_ = 0;
  SpacePtr space_;
  std::vector<Piece> pieces_;
  std::vector<std::int32_t> owner_;
};

/// sum_j mu(A_j) v_j, accumulated in piece order.
Vector integrateSimple(const SimpleFn& s, const MeasureSpace& X);
Vector evalSimple(const SimpleFn& s, const Point& pt);
/// a*s + b*t on the common refinement of both piece partitions.
SimpleFn combineSimple(Scalar a, const SimpleFn& s, Scalar b, const SimpleFn& t,
                       const MeasureSpace& X);
SimpleFn subtractSimple(const SimpleFn& s, const SimpleFn& t, const MeasureSpace& X);
/// Exact value of integral p(s) d mu = sum_j mu(A_j) p(v_j).
double integrateSeminorm(const Seminorm& p, const SimpleFn& s, const MeasureSpace& X);

}  // namespace lcx
