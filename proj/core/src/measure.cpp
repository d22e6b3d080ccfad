#include "lcx/measure.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <unordered_set>

#include "lcx/error.hpp"

namespace lcx {
namespace {

constexpr int kMaxLevel = 40;

void checkLevel(int level) {
  if (level < 0 || level > kMaxLevel) {
    throw Error(ErrorCode::kInvalidArgument, "refinement level out of range");
  }
}

}  // namespace

MeasureSpace MeasureSpace::discrete(std::vector<Atom> atoms) {
  if (atoms.empty()) throw Error(ErrorCode::kInvalidArgument, "discrete space without atoms");
  std::unordered_set<std::string> ids;
  MeasureSpace X;
  X.discrete_ = true;
  for (const auto& atom : atoms) {
    if (!std::isfinite(atom.weight) || atom.weight < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "atom '" + atom.id + "': weights >= 0 and finite required");
    }
    if (!std::isfinite(atom.position)) {
      throw Error(ErrorCode::kInvalidArgument, "atom '" + atom.id + "': non-finite position");
    }
    if (!ids.insert(atom.id).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate atom id '" + atom.id + "'");
    }
    X.total_mass_ += atom.weight;
  }
  X.atoms_ = std::move(atoms);
  return X;
}

MeasureSpace MeasureSpace::interval(double a, double b, std::size_t base_cells) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw Error(ErrorCode::kInvalidArgument, "interval needs finite a < b");
  }
  if (base_cells == 0) throw Error(ErrorCode::kInvalidArgument, "base partition count must be >= 1");
  MeasureSpace X;
  X.discrete_ = false;
  X.a_ = a;
  X.b_ = b;
  X.base_cells_ = base_cells;
  X.total_mass_ = b - a;
  return X;
}

std::size_t MeasureSpace::cellCount(int level) const {
  if (discrete_) return atoms_.size();
  checkLevel(level);
  return base_cells_ << level;
}

double MeasureSpace::cellWidth(int level) const {
  if (discrete_) throw Error(ErrorCode::kInvalidArgument, "cells need an interval space");
  return (b_ - a_) / static_cast<double>(cellCount(level));
}

double MeasureSpace::cellMidpoint(int level, std::size_t cell) const {
  const double w = cellWidth(level);
  return a_ + (static_cast<double>(cell) + 0.5) * w;
}

std::size_t MeasureSpace::cellOf(int level, double x) const {
  const std::size_t n = cellCount(level);
  const double u = (x - a_) / (b_ - a_) * static_cast<double>(n);
  if (!(u > 0.0)) return 0;
  const auto c = static_cast<std::size_t>(u);
  return std::min(c, n - 1);
}

std::vector<std::size_t> MeasureSpace::nullSet() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].weight == 0.0) out.push_back(i);
  }
  return out;
}

std::vector<Point> MeasureSpace::samplePoints(int level) const {
  std::vector<Point> pts;
  if (discrete_) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (atoms_[i].weight > 0.0) pts.push_back({i, atoms_[i].position});
    }
    return pts;
  }
  const std::size_t n = cellCount(level);
  pts.reserve(n);
  for (std::size_t c = 0; c < n; ++c) pts.push_back({c, cellMidpoint(level, c)});
  return pts;
}

MeasurableSet::MeasurableSet(SetKind kind, int level, std::vector<std::size_t> members)
    : kind_(kind), level_(level), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

MeasurableSet MeasurableSet::atoms(std::vector<std::size_t> members) {
  return MeasurableSet(SetKind::kAtoms, 0, std::move(members));
}

MeasurableSet MeasurableSet::cells(int level, std::vector<std::size_t> members) {
  checkLevel(level);
  return MeasurableSet(SetKind::kCells, level, std::move(members));
}

MeasurableSet MeasurableSet::interval(const MeasureSpace& X, double lo, double hi, int level) {
  if (X.isDiscrete()) throw Error(ErrorCode::kIncompatibleSet, "interval set on discrete space");
  const double n = static_cast<double>(X.cellCount(level));
  const double ulo = (lo - X.a()) / (X.b() - X.a()) * n;
  const double uhi = (hi - X.a()) / (X.b() - X.a()) * n;
  const double rlo = std::round(ulo);
  const double rhi = std::round(uhi);
  if (std::abs(ulo - rlo) > 1e-9 || std::abs(uhi - rhi) > 1e-9 || rlo < 0.0 || rhi > n ||
      rlo > rhi) {
    throw Error(ErrorCode::kIncompatibleSet, "interval ends not aligned to the partition level");
  }
  std::vector<std::size_t> members;
  for (auto c = static_cast<std::size_t>(rlo); c < static_cast<std::size_t>(rhi); ++c) {
    members.push_back(c);
  }
  return cells(level, std::move(members));
}

MeasurableSet MeasurableSet::emptyLike(const MeasurableSet& other) {
  return MeasurableSet(other.kind_, other.level_, {});
}

bool MeasurableSet::containsIndex(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

MeasurableSet MeasurableSet::refinedTo(int level) const {
  if (kind_ == SetKind::kAtoms || level == level_) return *this;
  if (level < level_) {
    throw Error(ErrorCode::kInvalidArgument, "cannot coarsen a measurable set");
  }
  checkLevel(level);
  const int shift = level - level_;
  const std::size_t split = std::size_t{1} << shift;
  std::vector<std::size_t> out;
  out.reserve(members_.size() * split);
  for (auto c : members_) {
    for (std::size_t k = 0; k < split; ++k) out.push_back((c << shift) + k);
  }
  return MeasurableSet(kind_, level, std::move(out));
}

namespace {

template <class Op>
MeasurableSet combine(const MeasurableSet& a, const MeasurableSet& b, Op op) {
  if (a.kind() != b.kind()) {
    throw Error(ErrorCode::kIncompatibleSet, "set algebra across atom and cell sets");
  }
  const int level = std::max(a.level(), b.level());
  const MeasurableSet ra = a.refinedTo(level);
  const MeasurableSet rb = b.refinedTo(level);
  std::vector<std::size_t> out;
  op(ra.members(), rb.members(), std::back_inserter(out));
  return a.kind() == SetKind::kAtoms ? MeasurableSet::atoms(std::move(out))
                                     : MeasurableSet::cells(level, std::move(out));
}

}  // namespace

MeasurableSet unite(const MeasurableSet& a, const MeasurableSet& b) {
  return combine(a, b, [](auto x, auto y, auto out) {
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), out);
  });
}

MeasurableSet intersect(const MeasurableSet& a, const MeasurableSet& b) {
  return combine(a, b, [](auto x, auto y, auto out) {
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), out);
  });
}

MeasurableSet subtract(const MeasurableSet& a, const MeasurableSet& b) {
  return combine(a, b, [](auto x, auto y, auto out) {
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), out);
  });
}

void requireCompatible(const MeasureSpace& X, const MeasurableSet& A) {
  const bool kind_ok = X.isDiscrete() == (A.kind() == SetKind::kAtoms);
  if (!kind_ok) throw Error(ErrorCode::kIncompatibleSet, "set kind does not match the space");
  if (A.empty()) return;
  if (A.members().back() >= X.cellCount(A.level())) {
    throw Error(ErrorCode::kIncompatibleSet, "set member outside the space");
  }
}

double measureOf(const MeasureSpace& X, const MeasurableSet& A) {
  requireCompatible(X, A);
  if (X.isDiscrete()) {
    double m = 0.0;
    for (auto i : A.members()) m += X.atoms()[i].weight;
    return m;
  }
  return static_cast<double>(A.members().size()) * X.cellWidth(A.level());
}

double Partition::lower(std::size_t i) const { return a + static_cast<double>(i) * width; }
double Partition::upper(std::size_t i) const {
  return i + 1 == cells ? b : a + static_cast<double>(i + 1) * width;
}

Partition refinePartition(const MeasureSpace& X, int level) {
  if (X.isDiscrete()) {
    throw Error(ErrorCode::kInvalidArgument, "refinePartition needs an interval space");
  }
  Partition p;
  p.a = X.a();
  p.b = X.b();
  p.level = level;
  p.cells = X.cellCount(level);
  p.width = X.cellWidth(level);
  return p;
}

}  // namespace lcx
