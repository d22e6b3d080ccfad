#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lcx {

struct Atom {
  std::string id;
  double weight = 0.0;
  /// Coordinate handed to position-based integrands.
  double position = 0.0;
};

/// A point of X as seen by integrands: an atom index (discrete spaces) or a
/// cell index at some refinement level together with the coordinate x.
struct Point {
  std::size_t index = 0;
  double x = 0.0;
};

/// Finite-mass measure space: weighted atoms, or [a, b] with Lebesgue
/// measure and a dyadic hierarchy of uniform partitions. Weight-0 atoms form
/// the null set.
class MeasureSpace {
 public:
  static MeasureSpace discrete(std::vector<Atom> atoms);
  static MeasureSpace interval(double a, double b, std::size_t base_cells);

  bool isDiscrete() const noexcept { return discrete_; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::size_t baseCells() const noexcept { return base_cells_; }
  double totalMass() const noexcept { return total_mass_; }

  /// Number of elementary cells at `level` (atoms for discrete spaces).
  std::size_t cellCount(int level) const;
  double cellWidth(int level) const;
  double cellMidpoint(int level, std::size_t cell) const;
  /// Cell at `level` containing x (half-open cells, the last one closed).
  std::size_t cellOf(int level, double x) const;

  bool isNullAtom(std::size_t i) const { return atoms_.at(i).weight == 0.0; }
  std::vector<std::size_t> nullSet() const;

  /// Sample points of X minus its null set: positive-weight atoms in
  /// ascending order, or every cell midpoint at `level`.
  std::vector<Point> samplePoints(int level) const;

 private:
  bool discrete_ = true;
  std::vector<Atom> atoms_;
  double a_ = 0.0;
  double b_ = 0.0;
  std::size_t base_cells_ = 0;
  double total_mass_ = 0.0;
};

enum class SetKind { kAtoms, kCells };

/// Atom subset, or a finite union of cells at one refinement level. Members
/// are sorted and unique.
class MeasurableSet {
 public:
  static MeasurableSet atoms(std::vector<std::size_t> members);
  static MeasurableSet cells(int level, std::vector<std::size_t> members);
  /// [lo, hi) on an interval space; both ends must be aligned to `level`.
  static MeasurableSet interval(const MeasureSpace& X, double lo, double hi, int level);
  static MeasurableSet emptyLike(const MeasurableSet& other);

  SetKind kind() const noexcept { return kind_; }
  int level() const noexcept { return level_; }
  std::span<const std::size_t> members() const noexcept { return members_; }
  bool empty() const noexcept { return members_.empty(); }
  bool containsIndex(std::size_t i) const;

  /// Same set expressed at a finer level (each cell splits into 2^k cells).
  MeasurableSet refinedTo(int level) const;

  friend bool operator==(const MeasurableSet&, const MeasurableSet&) = default;

 private:
  MeasurableSet(SetKind kind, int level, std::vector<std::size_t> members);

  SetKind kind_ = SetKind::kAtoms;
  int level_ = 0;
  std::vector<std::size_t> members_;
};

MeasurableSet unite(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet intersect(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet subtract(const MeasurableSet& a, const MeasurableSet& b);

/// Throws Error(kIncompatibleSet) when A does not live on X.
void requireCompatible(const MeasureSpace& X, const MeasurableSet& A);
double measureOf(const MeasureSpace& X, const MeasurableSet& A);

struct Partition {
  double a = 0.0;
  double b = 0.0;
  int level = 0;
  std::size_t cells = 0;
  double width = 0.0;

  double lower(std::size_t i) const;
  double upper(std::size_t i) const;
};

/// Uniform partition with baseCells() * 2^level cells; throws on discrete X.
Partition refinePartition(const MeasureSpace& X, int level);

}  // namespace lcx
