#include "lcx/linear_map.hpp"

#include <cmath>

#include "lcx/error.hpp"

namespace lcx {
namespace {

std::vector<SparseRow> compileRows(const Space& source, const Space& target,
                                   const LinearAction& action) {
  std::vector<SparseRow> rows;
  auto need_target_dim = [&](std::size_t d, const char* what) {
    if (target.dim() != d) {
      throw Error(ErrorCode::kSpaceMismatch,
                  std::string(what) + ": target '" + target.id() + "' must have dimension " +
                      std::to_string(d));
    }
  };
  auto check_index = [&](std::size_t i, const char* what) {
    if (i >= source.dim()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + ": index " + std::to_string(i) + " outside source '" +
                      source.id() + "'");
    }
  };

  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, CoordinateProjection> ||
                      std::is_same_v<T, SubgridTruncation>) {
          const char* what = std::is_same_v<T, CoordinateProjection> ? "projection" : "subgrid";
          if constexpr (std::is_same_v<T, SubgridTruncation>) {
            if (source.kind() != SpaceKind::kSampledFunction) {
              throw Error(ErrorCode::kSpaceMismatch, "subgrid truncation needs a sampled source");
            }
          }
          if (a.indices.empty()) throw Error(ErrorCode::kInvalidArgument, "empty index list");
          need_target_dim(a.indices.size(), what);
          for (auto i : a.indices) {
            check_index(i, what);
            rows.push_back({{i, Scalar{1.0}}});
          }
        } else if constexpr (std::is_same_v<T, PointEvaluation>) {
          need_target_dim(1, "point evaluation");
          if (source.kind() == SpaceKind::kSampledFunction) {
            SparseRow row;
            for (const auto& [i, w] : source.interpolationWeights(a.at)) row.emplace_back(i, w);
            rows.push_back(std::move(row));
          } else {
            const double r = std::round(a.at);
            if (std::abs(r - a.at) > 0.0 || r < 0.0) {
              throw Error(ErrorCode::kInvalidArgument,
                          "point evaluation on coordinates needs an integer index");
            }
            check_index(static_cast<std::size_t>(r), "point evaluation");
            rows.push_back({{static_cast<std::size_t>(r), Scalar{1.0}}});
          }
        } else if constexpr (std::is_same_v<T, MatrixAction>) {
          if (a.cols != source.dim() || a.entries.size() != a.rows * a.cols) {
            throw Error(ErrorCode::kSpaceMismatch, "matrix shape does not match the source");
          }
          need_target_dim(a.rows, "matrix");
          for (std::size_t r = 0; r < a.rows; ++r) {
            SparseRow row;
            for (std::size_t c = 0; c < a.cols; ++c) {
              const Scalar e = a.entries[r * a.cols + c];
              if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
                throw Error(ErrorCode::kInvalidArgument, "non-finite matrix entry");
              }
              if (e != Scalar{}) row.emplace_back(c, e);
            }
            rows.push_back(std::move(row));
          }
        } else {
          need_target_dim(1, "weighted integration");
          if (a.weights.size() != source.dim()) {
            throw Error(ErrorCode::kSpaceMismatch, "weight vector does not match the source");
          }
          SparseRow row;
          for (std::size_t i = 0; i < a.weights.size(); ++i) {
            const Scalar w = a.weights[i];
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
              throw Error(ErrorCode::kInvalidArgument, "non-finite integration weight");
            }
            if (w != Scalar{}) row.emplace_back(i, w);
          }
          rows.push_back(std::move(row));
        }
      },
      action);
  return rows;
}

}  // namespace

SpacePtr scalarSpace() {
  static const SpacePtr kScalars = Space::coordinates("C", 1);
  return kScalars;
}

LinearMap::LinearMap(std::string name, SpacePtr source, SpacePtr target, LinearAction action)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      action_(std::move(action)) {
  if (!source_ || !target_) throw Error(ErrorCode::kInvalidArgument, "linear map without spaces");
  rows_ = compileRows(*source_, *target_, action_);
}

Vector LinearMap::operator()(const Vector& v) const {
  requireSameSpace(*source_, *v.space(), name_.c_str());
  const auto data = v.data();
  std::vector<Scalar> out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar acc{};
    for (const auto& [i, c] : rows_[r]) acc += c * data[i];
    out[r] = acc;
  }
  return Vector(target_, std::move(out));
}

Scalar LinearMap::functional(const Vector& v) const {
  if (!isFunctional()) {
    throw Error(ErrorCode::kInvalidArgument, name_ + " is not a functional");
  }
  return (*this)(v)[0];
}

LinearMap LinearMap::withWitness(const std::string& target_seminorm,
                                 Seminorm source_seminorm) const {
  requireSameSpace(*source_, *source_seminorm.space(), "continuity witness");
  LinearMap copy = *this;
  copy.witnesses_.insert_or_assign(target_seminorm, std::move(source_seminorm));
  return copy;
}

bool LinearMap::hasDeclaredWitness(const std::string& target_seminorm) const {
  return witnesses_.count(target_seminorm) > 0;
}

Seminorm LinearMap::witness(const Seminorm& q) const {
  requireSameSpace(*target_, *q.space(), "continuity witness");
  if (auto it = witnesses_.find(q.name()); it != witnesses_.end()) return it->second;
  return pullbackWitness(*this, q);
}

Vector applyLinear(const LinearMap& T, const Vector& v) { return T(v); }

Seminorm pullbackWitness(const LinearMap& T, const Seminorm& q) {
  requireSameSpace(*T.target(), *q.space(), "pullback witness");
  const auto rows = T.rows();
  const std::size_t dim = T.source()->dim();
  std::vector<SeminormTerm> terms;

  auto functional_term = [&](double factor, const std::vector<Scalar>& dense) {
    FunctionalTerm ft;
    for (std::size_t k = 0; k < dense.size(); ++k) {
      if (dense[k] != Scalar{}) {
        ft.indices.push_back(k);
        ft.coefficients.push_back(dense[k]);
      }
    }
    if (!ft.indices.empty()) terms.push_back(SeminormTerm{factor, std::move(ft)});
  };

  for (const auto& term : q.terms()) {
    std::visit(
        [&](const auto& t) {
          using K = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<K, SupTerm>) {
            for (std::size_t j = 0; j < t.indices.size(); ++j) {
              if (t.weights[j] == 0.0) continue;
              std::vector<Scalar> dense(dim);
              for (const auto& [k, c] : rows[t.indices[j]]) dense[k] += t.weights[j] * c;
              functional_term(term.factor, dense);
            }
          } else if constexpr (std::is_same_v<K, L1Term>) {
            std::vector<double> col(dim, 0.0);
            for (std::size_t j = 0; j < t.indices.size(); ++j) {
              for (const auto& [k, c] : rows[t.indices[j]]) col[k] += t.weights[j] * std::abs(c);
            }
            L1Term lt;
            for (std::size_t k = 0; k < dim; ++k) {
              if (col[k] > 0.0) {
                lt.indices.push_back(k);
                lt.weights.push_back(col[k]);
              }
            }
            if (!lt.indices.empty()) terms.push_back(SeminormTerm{term.factor, std::move(lt)});
          } else {
            std::vector<Scalar> dense(dim);
            for (std::size_t j = 0; j < t.indices.size(); ++j) {
              for (const auto& [k, c] : rows[t.indices[j]]) dense[k] += t.coefficients[j] * c;
            }
            functional_term(term.factor, dense);
          }
        },
        term.kind);
  }
  // q o T vanishes identically: any seminorm dominates it.
  if (terms.empty()) terms.push_back(SeminormTerm{1.0, SupTerm{{0}, {1.0}}});
  return Seminorm::fromTerms(T.source(), std::move(terms),
                             "pullback(" + q.name() + "," + T.name() + ")");
}

}  // namespace lcx
