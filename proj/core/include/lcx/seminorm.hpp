#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lcx/space.hpp"

namespace lcx {

/// max_i w_i |v_i| over an index subset.
struct SupTerm {
  std::vector<std::size_t> indices;
  std::vector<double> weights;
};

/// sum_i w_i |v_i| over an index subset.
struct L1Term {
  std::vector<std::size_t> indices;
  std::vector<double> weights;
};

/// |sum_i c_i v_i| for a fixed linear functional.
struct FunctionalTerm {
  std::vector<std::size_t> indices;
  std::vector<Scalar> coefficients;
};

struct SeminormTerm {
  double factor = 1.0;
  std::variant<SupTerm, L1Term, FunctionalTerm> kind;
};

/// A continuous seminorm on a concrete space, stored as
///   p(v) = max_t factor_t * basic_t(v)
/// so that pointwise maxima and positive rescalings stay closed.
class Seminorm {
 public:
  static Seminorm weightedSup(SpacePtr space, std::vector<std::size_t> indices,
                              std::vector<double> weights, std::string name = {});
  static Seminorm weightedL1(SpacePtr space, std::vector<std::size_t> indices,
                             std::vector<double> weights, std::string name = {});
  static Seminorm absFunctional(SpacePtr space, std::vector<std::size_t> indices,
                                std::vector<Scalar> coefficients, std::string name = {});
  /// Validates every term against `space`.
  static Seminorm fromTerms(SpacePtr space, std::vector<SeminormTerm> terms, std::string name);

  double operator()(const Vector& v) const;
  /// p(u - v) without materialising the difference.
  double distance(const Vector& u, const Vector& v) const;

  const std::string& name() const noexcept { return name_; }
  const SpacePtr& space() const noexcept { return space_; }
  std::span<const SeminormTerm> terms() const noexcept { return terms_; }

  Seminorm renamed(std::string name) const;

 private:
  Seminorm(SpacePtr space, std::vector<SeminormTerm> terms, std::string name);

  template <class Entry>
  double evaluate(Entry&& entry) const;

  SpacePtr space_;
  std::vector<SeminormTerm> terms_;
  std::string name_;
};

double evalSeminorm(const Seminorm& p, const Vector& v);
/// r(v) = max(p(v), q(v)).
Seminorm maxSeminorm(const Seminorm& p, const Seminorm& q);
/// factor * p; factor must be a positive finite real.
Seminorm scaleSeminorm(const Seminorm& p, double factor);

/// Finite ordered generating family p_1..p_m together with its cofinal
/// max-chain q_n = max(p_1, ..., p_n).
class SeminormFamily {
 public:
  SeminormFamily(SpacePtr space, std::vector<Seminorm> members);

  std::size_t size() const noexcept { return members_.size(); }
  const SpacePtr& space() const noexcept { return space_; }
  std::span<const Seminorm> members() const noexcept { return members_; }
  const Seminorm& member(std::size_t i) const { return members_.at(i); }
  /// q_n, 1-based: chain(1) == p_1, chain(size()) == top().
  const Seminorm& chain(std::size_t n) const;
  const Seminorm& top() const { return chain_.back(); }
  /// Index of a member by name, or size() when absent.
  std::size_t find(const std::string& name) const;

  /// True iff q_m(v) = 0 forces v = 0 on the representation, decided by the
  /// rank of the constraints {v_i = 0 for covered indices} plus every
  /// functional row.
  bool separatesPoints() const;

 private:
  SpacePtr space_;
  std::vector<Seminorm> members_;
  std::vector<Seminorm> chain_;
};

}  // namespace lcx
