#include "lcx/simple_function.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "lcx/error.hpp"

namespace lcx {
namespace {

constexpr std::size_t kMaxDenseCells = std::size_t{1} << 26;

}  // namespace

SimpleFn::SimpleFn(const MeasureSpace& X, SpacePtr V, std::vector<Piece> pieces)
    : discrete_(X.isDiscrete()),
      atom_count_(X.isDiscrete() ? X.atoms().size() : 0),
      a_(X.a()),
      b_(X.b()),
      base_cells_(X.baseCells()),
      space_(std::move(V)) {
  if (!space_) throw Error(ErrorCode::kInvalidArgument, "simple function without a space");
  std::vector<Piece> kept;
  kept.reserve(pieces.size());
  for (auto& p : pieces) {
    requireCompatible(X, p.set);
    requireSameSpace(*space_, *p.value.space(), "simple function piece");
    if (!p.set.empty()) {
      level_ = std::max(level_, p.set.level());
      kept.push_back(std::move(p));
    }
  }
  if (!discrete_) {
    for (auto& p : kept) {
      if (p.set.level() != level_) p.set = p.set.refinedTo(level_);
    }
  }
  const std::size_t slots = discrete_ ? atom_count_ : X.cellCount(level_);
  if (slots > kMaxDenseCells) {
    throw Error(ErrorCode::kInvalidArgument, "simple function refinement level too fine");
  }
  owner_.assign(slots, -1);
  for (std::size_t j = 0; j < kept.size(); ++j) {
    for (auto m : kept[j].set.members()) {
      if (owner_[m] != -1) {
        throw Error(ErrorCode::kInvalidArgument, "simple function pieces are not disjoint");
      }
      owner_[m] = static_cast<std::int32_t>(j);
    }
  }
  pieces_ = std::move(kept);
}

SimpleFn SimpleFn::zero(const MeasureSpace& X, SpacePtr V) { return SimpleFn(X, std::move(V), {}); }

std::size_t SimpleFn::slotOf(const Point& pt) const {
  if (discrete_) {
    if (pt.index >= atom_count_) throw Error(ErrorCode::kInvalidArgument, "atom index out of range");
    return pt.index;
  }
  const std::size_t n = owner_.size();
  const double u = (pt.x - a_) / (b_ - a_) * static_cast<double>(n);
  if (!(u > 0.0)) return 0;
  return std::min(static_cast<std::size_t>(u), n - 1);
}

std::ptrdiff_t SimpleFn::pieceAt(const Point& pt) const { return owner_[slotOf(pt)]; }

Vector SimpleFn::operator()(const Point& pt) const {
  const auto j = pieceAt(pt);
  return j < 0 ? Vector::zero(space_) : pieces_[static_cast<std::size_t>(j)].value;
}

bool SimpleFn::sameDomain(const SimpleFn& other) const noexcept {
  return discrete_ == other.discrete_ && atom_count_ == other.atom_count_ && a_ == other.a_ &&
         b_ == other.b_ && base_cells_ == other.base_cells_;
}

Vector integrateSimple(const SimpleFn& s, const MeasureSpace& X) {
  Vector acc = Vector::zero(s.space());
  for (const auto& p : s.pieces()) acc += measureOf(X, p.set) * p.value;
  return acc;
}

Vector evalSimple(const SimpleFn& s, const Point& pt) { return s(pt); }

SimpleFn combineSimple(Scalar a, const SimpleFn& s, Scalar b, const SimpleFn& t,
                       const MeasureSpace& X) {
  requireSameSpace(*s.space(), *t.space(), "combineSimple");
  if (!s.sameDomain(t)) throw Error(ErrorCode::kIncompatibleSet, "simple functions on different X");
  const int level = std::max(s.level(), t.level());
  const std::size_t slots = X.cellCount(level);

  // Cells of the common refinement, grouped by the (piece of s, piece of t)
  // pair in first-seen order.
  std::map<std::pair<std::ptrdiff_t, std::ptrdiff_t>, std::size_t> index;
  std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> keys;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t c = 0; c < slots; ++c) {
    const Point pt{c, X.isDiscrete() ? 0.0 : X.cellMidpoint(level, c)};
    const std::ptrdiff_t js = s.pieceAt(pt);
    const std::ptrdiff_t jt = t.pieceAt(pt);
    if (js < 0 && jt < 0) continue;
    auto [it, inserted] = index.try_emplace({js, jt}, keys.size());
    if (inserted) {
      keys.emplace_back(js, jt);
      members.emplace_back();
    }
    members[it->second].push_back(c);
  }

  std::vector<Piece> pieces;
  pieces.reserve(keys.size());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const auto [js, jt] = keys[k];
    Vector v = Vector::zero(s.space());
    if (js >= 0) v += a * s.pieces()[static_cast<std::size_t>(js)].value;
    if (jt >= 0) v += b * t.pieces()[static_cast<std::size_t>(jt)].value;
    MeasurableSet set = X.isDiscrete() ? MeasurableSet::atoms(std::move(members[k]))
                                       : MeasurableSet::cells(level, std::move(members[k]));
    pieces.push_back(Piece{std::move(set), std::move(v)});
  }
  return SimpleFn(X, s.space(), std::move(pieces));
}

SimpleFn subtractSimple(const SimpleFn& s, const SimpleFn& t, const MeasureSpace& X) {
  return combineSimple(Scalar{1.0}, s, Scalar{-1.0}, t, X);
}

double integrateSeminorm(const Seminorm& p, const SimpleFn& s, const MeasureSpace& X) {
  double acc = 0.0;
  for (const auto& piece : s.pieces()) acc += measureOf(X, piece.set) * p(piece.value);
  return acc;
}

}  // namespace lcx
