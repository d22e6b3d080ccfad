#include "lcx/seminorm.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "lcx/error.hpp"

namespace lcx {
namespace {

void validateIndices(const Space& space, const std::vector<std::size_t>& indices,
                     std::size_t n_weights, const char* what) {
  if (indices.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": empty index subset");
  }
  if (indices.size() != n_weights) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + ": indices and weights differ in length");
  }
  for (auto i : indices) {
    if (i >= space.dim()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + ": index " + std::to_string(i) + " outside space '" +
                      space.id() + "'");
    }
  }
}

void validateWeights(const std::vector<double>& weights, const char* what) {
  bool any_positive = false;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + ": weights must be finite and >= 0");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": needs a positive weight");
  }
}

void validateTerm(const Space& space, const SeminormTerm& term) {
  if (!(term.factor > 0.0) || !std::isfinite(term.factor)) {
    throw Error(ErrorCode::kInvalidArgument, "seminorm term factor must be positive and finite");
  }
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, FunctionalTerm>) {
          validateIndices(space, t.indices, t.coefficients.size(), "functional seminorm");
          bool any = false;
          for (const auto& c : t.coefficients) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
              throw Error(ErrorCode::kInvalidArgument,
                          "functional seminorm: non-finite coefficient");
            }
            any = any || c != Scalar{};
          }
          if (!any) {
            throw Error(ErrorCode::kInvalidArgument,
                        "functional seminorm: needs a nonzero coefficient");
          }
        } else {
          validateIndices(space, t.indices, t.weights.size(), "weighted seminorm");
          validateWeights(t.weights, "weighted seminorm");
        }
      },
      term.kind);
}

}  // namespace

Seminorm::Seminorm(SpacePtr space, std::vector<SeminormTerm> terms, std::string name)
    : space_(std::move(space)), terms_(std::move(terms)), name_(std::move(name)) {}

Seminorm Seminorm::fromTerms(SpacePtr space, std::vector<SeminormTerm> terms, std::string name) {
  if (!space) throw Error(ErrorCode::kInvalidArgument, "seminorm without a space");
  if (terms.empty()) throw Error(ErrorCode::kInvalidArgument, "seminorm without terms");
  for (const auto& t : terms) validateTerm(*space, t);
  return Seminorm(std::move(space), std::move(terms), std::move(name));
}

Seminorm Seminorm::weightedSup(SpacePtr space, std::vector<std::size_t> indices,
                               std::vector<double> weights, std::string name) {
  return fromTerms(std::move(space),
                   {SeminormTerm{1.0, SupTerm{std::move(indices), std::move(weights)}}},
                   std::move(name));
}

Seminorm Seminorm::weightedL1(SpacePtr space, std::vector<std::size_t> indices,
                              std::vector<double> weights, std::string name) {
  return fromTerms(std::move(space),
                   {SeminormTerm{1.0, L1Term{std::move(indices), std::move(weights)}}},
                   std::move(name));
}

Seminorm Seminorm::absFunctional(SpacePtr space, std::vector<std::size_t> indices,
                                 std::vector<Scalar> coefficients, std::string name) {
  return fromTerms(
      std::move(space),
      {SeminormTerm{1.0, FunctionalTerm{std::move(indices), std::move(coefficients)}}},
      std::move(name));
}

Seminorm Seminorm::renamed(std::string name) const {
  Seminorm copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

// `entry(i)` yields the i-th payload entry of the vector being measured.
// Reductions run in ascending term and index order.
template <class Entry>
double Seminorm::evaluate(Entry&& entry) const {
  double result = 0.0;
  for (const auto& term : terms_) {
    double basic = 0.0;
    std::visit(
        [&](const auto& t) {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, SupTerm>) {
            for (std::size_t k = 0; k < t.indices.size(); ++k) {
              basic = std::max(basic, t.weights[k] * std::abs(entry(t.indices[k])));
            }
          } else if constexpr (std::is_same_v<T, L1Term>) {
            for (std::size_t k = 0; k < t.indices.size(); ++k) {
              basic += t.weights[k] * std::abs(entry(t.indices[k]));
            }
          } else {
            Scalar acc{};
            for (std::size_t k = 0; k < t.indices.size(); ++k) {
              acc += t.coefficients[k] * entry(t.indices[k]);
            }
            basic = std::abs(acc);
          }
        },
        term.kind);
    result = std::max(result, term.factor * basic);
  }
  return result;
}

double Seminorm::operator()(const Vector& v) const {
  requireSameSpace(*space_, *v.space(), "seminorm evaluation");
  const auto data = v.data();
  return evaluate([&](std::size_t i) { return data[i]; });
}

double Seminorm::distance(const Vector& u, const Vector& v) const {
  requireSameSpace(*space_, *u.space(), "seminorm distance");
  requireSameSpace(*space_, *v.space(), "seminorm distance");
  const auto a = u.data();
  const auto b = v.data();
  return evaluate([&](std::size_t i) { return a[i] - b[i]; });
}

double evalSeminorm(const Seminorm& p, const Vector& v) { return p(v); }

Seminorm maxSeminorm(const Seminorm& p, const Seminorm& q) {
  requireSameSpace(*p.space(), *q.space(), "maxSeminorm");
  std::vector<SeminormTerm> terms(p.terms().begin(), p.terms().end());
  terms.insert(terms.end(), q.terms().begin(), q.terms().end());
  return Seminorm::fromTerms(p.space(), std::move(terms),
                             "max(" + p.name() + "," + q.name() + ")");
}

Seminorm scaleSeminorm(const Seminorm& p, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::kInvalidArgument, "scaleSeminorm needs a positive finite factor");
  }
  std::vector<SeminormTerm> terms(p.terms().begin(), p.terms().end());
  for (auto& t : terms) t.factor *= factor;
  return Seminorm::fromTerms(p.space(), std::move(terms), p.name());
}

SeminormFamily::SeminormFamily(SpacePtr space, std::vector<Seminorm> members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorCode::kInvalidArgument, "empty seminorm family");
  for (const auto& p : members_) requireSameSpace(*space_, *p.space(), "seminorm family");
  chain_.reserve(members_.size());
  chain_.push_back(members_.front().renamed("q1"));
  for (std::size_t n = 1; n < members_.size(); ++n) {
    chain_.push_back(maxSeminorm(chain_.back(), members_[n]).renamed("q" + std::to_string(n + 1)));
  }
}

const Seminorm& SeminormFamily::chain(std::size_t n) const {
  if (n == 0 || n > chain_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "chain index out of range");
  }
  return chain_[n - 1];
}

std::size_t SeminormFamily::find(const std::string& name) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].name() == name) return i;
  }
  return members_.size();
}

bool SeminormFamily::separatesPoints() const {
  const std::size_t dim = space_->dim();
  std::vector<std::vector<Scalar>> rows;
  std::vector<bool> covered(dim, false);
  for (const auto& term : top().terms()) {
    std::visit(
        [&](const auto& t) {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, FunctionalTerm>) {
            std::vector<Scalar> row(dim);
            for (std::size_t k = 0; k < t.indices.size(); ++k) row[t.indices[k]] += t.coefficients[k];
            rows.push_back(std::move(row));
          } else {
            for (std::size_t k = 0; k < t.indices.size(); ++k) {
              if (t.weights[k] > 0.0) covered[t.indices[k]] = true;
            }
          }
        },
        term.kind);
  }
  // Covered coordinates are pinned to zero; eliminate them and check that the
  // remaining functional rows have full rank on the free coordinates.
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!covered[i]) free.push_back(i);
  }
  if (free.empty()) return true;
  if (rows.size() < free.size()) return false;

  std::vector<std::vector<Scalar>> m;
  double scale = 0.0;
  for (const auto& r : rows) {
    std::vector<Scalar> reduced;
    reduced.reserve(free.size());
    for (auto i : free) {
      reduced.push_back(r[i]);
      scale = std::max(scale, std::abs(r[i]));
    }
    m.push_back(std::move(reduced));
  }
  const double eps = 1e-12 * std::max(1.0, scale);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < free.size() && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (std::abs(m[pivot][col]) <= eps) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const Scalar f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < free.size(); ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank == free.size();
}

}  // namespace lcx
