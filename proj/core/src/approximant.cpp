#include "lcx/approximant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lcx/error.hpp"
#include "lcx/quadrature.hpp"

namespace lcx {
namespace {

MeasurableSet makeSet(const MeasureSpace& X, int level, std::vector<std::size_t> members) {
  return X.isDiscrete() ? MeasurableSet::atoms(std::move(members))
                        : MeasurableSet::cells(level, std::move(members));
}

int commonLevel(std::span<const MeasurableSet> sets) {
  int level = 0;
  for (const auto& s : sets) level = std::max(level, s.level());
  return level;
}

std::size_t slotBound(std::span<const MeasurableSet> sets) {
  std::size_t bound = 0;
  for (const auto& s : sets) {
    if (!s.empty()) bound = std::max(bound, s.members().back() + 1);
  }
  return bound;
}

std::vector<MeasurableSet> refineAll(std::span<const MeasurableSet> sets) {
  const int level = commonLevel(sets);
  std::vector<MeasurableSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.refinedTo(level));
  return out;
}

}  // namespace

std::vector<MeasurableSet> buildLevelSets(const ImageSample& sample, const MeasureSpace& X,
                                          std::span<const Vector> centers, const Seminorm& p,
                                          double delta) {
  if (!(delta > 0.0)) throw Error(ErrorCode::kInvalidArgument, "delta must be > 0");
  std::vector<std::vector<std::size_t>> members(centers.size());
  CenterIndex index(p, centers, LowerBoundKey::choose(p, centers));
  for (std::size_t j = 0; j < centers.size(); ++j) index.insert(j);
  for (std::size_t i = 0; i < sample.values.size(); ++i) {
    const Vector& v = sample.values[i];
    if (!(p(v) > delta)) continue;
    index.forEachWithin(v, delta, [&](std::size_t j) { members[j].push_back(sample.points[i].index); });
  }
  std::vector<MeasurableSet> sets;
  sets.reserve(centers.size());
  for (auto& m : members) sets.push_back(makeSet(X, sample.level, std::move(m)));
  return sets;
}

std::vector<MeasurableSet> buildLevelSets(const IntegrandFn& f, const MeasureSpace& X,
                                          std::span<const Vector> centers, const Seminorm& p,
                                          double delta, int level) {
  return buildLevelSets(sampleImage(f, X, level), X, centers, p, delta);
}

std::vector<MeasurableSet> disjointify(std::span<const MeasurableSet> sets) {
  if (sets.empty()) return {};
  const auto refined = refineAll(sets);
  std::vector<char> taken(slotBound(refined), 0);
  std::vector<MeasurableSet> out;
  out.reserve(refined.size());
  for (const auto& A : refined) {
    std::vector<std::size_t> d;
    for (auto m : A.members()) {
      if (!taken[m]) d.push_back(m);
    }
    for (auto m : A.members()) taken[m] = 1;
    out.push_back(A.kind() == SetKind::kAtoms ? MeasurableSet::atoms(std::move(d))
                                              : MeasurableSet::cells(A.level(), std::move(d)));
  }
  return out;
}

PartitionCheck checkDisjointification(std::span<const MeasurableSet> A,
                                      std::span<const MeasurableSet> D) {
  PartitionCheck check;
  std::vector<MeasurableSet> all(A.begin(), A.end());
  all.insert(all.end(), D.begin(), D.end());
  const auto refined = refineAll(all);
  const std::size_t bound = slotBound(refined);
  std::vector<char> in_a(bound, 0);
  std::vector<unsigned> d_count(bound, 0);
  for (std::size_t k = 0; k < A.size(); ++k) {
    for (auto m : refined[k].members()) in_a[m] = 1;
  }
  for (std::size_t k = A.size(); k < refined.size(); ++k) {
    for (auto m : refined[k].members()) ++d_count[m];
  }
  for (std::size_t m = 0; m < bound; ++m) {
    if (d_count[m] > 1) check.pairwise_disjoint = false;
    if ((d_count[m] > 0) != (in_a[m] != 0)) check.union_equal = false;
  }
  return check;
}

ApproxStep buildApproximant(const IntegrandFn& f, const MeasureSpace& X, const Seminorm& p,
                            std::size_t n, const ApproxOptions& options) {
  const int level = sampleLevel(X, n, options.base_level);
  if (!X.isDiscrete() && level + 1 > options.quad_levels) {
    throw CapReachedError("sample level " + std::to_string(level) +
                              " leaves no room under the quadrature cap",
                          std::numeric_limits<double>::infinity());
  }
  const double delta = 1.0 / static_cast<double>(n);
  const ImageSample sample = sampleImage(f, X, level);
  const CoverNet net = coverImage(sample, p, delta);
  const auto A = buildLevelSets(sample, X, net.centers, p, delta);
  const auto D = disjointify(A);
  const PartitionCheck partition = checkDisjointification(A, D);
  if (!partition.pairwise_disjoint || !partition.union_equal) {
    throw Error(ErrorCode::kInternalConstruction, "D-sets do not partition the union of A-sets");
  }

  std::vector<Piece> pieces;
  std::vector<std::size_t> piece_center;
  std::vector<Point> piece_witness;
  std::vector<double> piece_measure;
  for (std::size_t j = 0; j < D.size(); ++j) {
    if (D[j].empty()) continue;
    piece_measure.push_back(measureOf(X, D[j]));
    pieces.push_back(Piece{D[j], net.centers[j]});
    piece_center.push_back(j);
    piece_witness.push_back(net.witnesses[j]);
  }
  SimpleFn s(X, f.space(), std::move(pieces));

  // p(s) <= 2 p(f) on every sample point, and the uncovered remainder.
  double max_ratio = 0.0;
  double uncovered_sup = 0.0;
  std::size_t uncovered = 0;
  double uncovered_mass = 0.0;
  for (std::size_t i = 0; i < sample.values.size(); ++i) {
    const auto j = s.pieceAt(sample.points[i]);
    const double pf = p(sample.values[i]);
    if (j < 0) {
      uncovered_sup = std::max(uncovered_sup, pf);
      ++uncovered;
      if (X.isDiscrete()) uncovered_mass += X.atoms()[sample.points[i].index].weight;
      continue;
    }
    const double ps = p(s.pieces()[static_cast<std::size_t>(j)].value);
    if (ps > 2.0 * pf * (1.0 + 1e-12)) {
      throw Error(ErrorCode::kInternalConstruction,
                  "approximant exceeds 2 p(f) at sample " + std::to_string(i));
    }
    max_ratio = std::max(max_ratio, ps / pf);
  }
  if (!X.isDiscrete()) uncovered_mass = static_cast<double>(uncovered) * X.cellWidth(level);

  double residual = 0.0;
  bool residual_converged = true;
  if (X.isDiscrete()) {
    for (std::size_t i = 0; i < sample.values.size(); ++i) {
      const auto& pt = sample.points[i];
      const auto j = s.pieceAt(pt);
      const double r = j < 0 ? p(sample.values[i])
                             : p.distance(sample.values[i], s.pieces()[static_cast<std::size_t>(j)].value);
      residual += X.atoms()[pt.index].weight * r;
    }
  } else {
    QuadratureOptions q;
    q.tol = options.residual_tol;
    q.min_level = level + 1;
    q.max_level = std::min(options.quad_levels, level + 1 + options.residual_extra_levels);
    if (q.max_level <= q.min_level) q.max_level = q.min_level + 1;
    const auto result = integrateReal(
        [&](const Point& pt) {
          const Vector v = f(pt);
          const auto j = s.pieceAt(pt);
          return j < 0 ? p(v) : p.distance(v, s.pieces()[static_cast<std::size_t>(j)].value);
        },
        X, q);
    residual = result.value;
    residual_converged = result.converged;
  }

  return ApproxStep{
      .seminorm = p.name(),
      .n = n,
      .delta = delta,
      .level = level,
      .centers = net.centers.size(),
      .approximant = std::move(s),
      .piece_center = std::move(piece_center),
      .piece_witness = std::move(piece_witness),
      .piece_measure = std::move(piece_measure),
      .residual = residual,
      .residual_converged = residual_converged,
      .partition = partition,
      .max_bound_ratio = max_ratio,
      .uncovered_mass = uncovered_mass,
      .uncovered_sup = uncovered_sup,
  };
}

Approximation approximate(const IntegrandFn& f, const MeasureSpace& X, const Seminorm& p,
                          double eps, const ApproxOptions& options) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::kInvalidArgument, "approximate needs eps > 0");
  }
  const Seminorm scaled = scaleSeminorm(p, 1.0 / eps).renamed(p.name());
  std::vector<std::pair<std::size_t, double>> trials;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= options.max_iter; n *= 2) {
    ApproxStep step = [&] {
      try {
        return buildApproximant(f, X, scaled, n, options);
      } catch (const CapReachedError&) {
        throw CapReachedError("approximation of " + p.name() + " to eps " + std::to_string(eps) +
                                  " ran out of quadrature levels at n = " + std::to_string(n),
                              best * eps);
      }
    }();
    trials.emplace_back(n, step.residual);
    if (step.residual_converged) best = std::min(best, step.residual);
    if (step.residual_converged && step.residual < 1.0) {
      const double residual = step.residual * eps;
      return Approximation{std::move(step), eps, residual, std::move(trials)};
    }
  }
  throw CapReachedError("approximation of " + p.name() + " to eps " + std::to_string(eps) +
                            " not reached within n <= " + std::to_string(options.max_iter),
                        best * eps);
}

}  // namespace lcx
