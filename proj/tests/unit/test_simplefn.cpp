#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace lcx;
using namespace lcx::test;

TEST_SUITE("simplefn") {

TEST_CASE("integral of one piece") {
  const auto V = coords(2);
  const auto X = MeasureSpace::discrete({{"a", 2.0, 0.0}, {"b", 1.0, 1.0}});
  const SimpleFn s(X, V, {Piece{MeasurableSet::atoms({0}), vec(V, {1.0, 0.0})}});
  CHECK(integrateSimple(s, X) == vec(V, {2.0, 0.0}));
}

TEST_CASE("integral without pieces is zero") {
  const auto V = coords(3);
  const auto X = MeasureSpace::interval(0.0, 1.0, 4);
  CHECK(integrateSimple(SimpleFn::zero(X, V), X).isZero());
  CHECK(integrateSimple(SimpleFn(X, V, {}), X).isZero());
}

TEST_CASE("two half-mass pieces average their values") {
  const auto V = coords(2);
  const auto X = MeasureSpace::interval(0.0, 1.0, 2);
  const Vector v = vec(V, {1.0, Scalar(0, 2)});
  const Vector w = vec(V, {-3.0, 5.0});
  const SimpleFn s(X, V, {Piece{MeasurableSet::interval(X, 0.0, 0.5, 0), v},
                          Piece{MeasurableSet::interval(X, 0.5, 1.0, 0), w}});
  CHECK(integrateSimple(s, X) == 0.5 * v + 0.5 * w);
}

TEST_CASE("pointwise evaluation") {
  const auto V = coords(1);
  const auto X = MeasureSpace::interval(0.0, 4.0, 4);
  const Vector v1 = vec(V, {1.0});
  const Vector v2 = vec(V, {2.0});
  const Piece a{MeasurableSet::interval(X, 0.0, 1.0, 0), v1};
  const Piece b{MeasurableSet::cells(1, {5}), v2};  // [2.5, 3)
  const SimpleFn s(X, V, {a, b});
  const SimpleFn r(X, V, {b, a});
  CHECK(evalSimple(s, Point{0, 0.5}) == v1);
  CHECK(evalSimple(s, Point{0, 2.75}) == v2);
  CHECK(evalSimple(s, Point{0, 1.5}).isZero());
  CHECK(evalSimple(s, Point{0, 3.5}).isZero());
  for (double x = 0.05; x < 4.0; x += 0.1) {
    CHECK(evalSimple(s, Point{0, x}) == evalSimple(r, Point{0, x}));
  }
}

TEST_CASE("construction normalises pieces") {
  const auto V = coords(1);
  const auto X = MeasureSpace::discrete({{"a", 1.0, 0.0}, {"b", 1.0, 1.0}, {"c", 1.0, 2.0}});
  const Vector v = vec(V, {1.0});
  const SimpleFn s(X, V, {Piece{MeasurableSet::atoms({}), v}, Piece{MeasurableSet::atoms({0}), v},
                          Piece{MeasurableSet::atoms({2}), v}});
  CHECK(s.pieces().size() == 2);  // equal values are not merged
  CHECK_THROWS_AS(SimpleFn(X, V, {Piece{MeasurableSet::atoms({0, 1}), v},
                                  Piece{MeasurableSet::atoms({1}), v}}),
                  Error);
  const auto I = MeasureSpace::interval(0.0, 1.0, 2);
  const SimpleFn t(I, V, {Piece{MeasurableSet::cells(0, {0}), v}, Piece{MeasurableSet::cells(2, {5}), v}});
  CHECK(t.level() == 2);
  CHECK(t.pieces()[0].set.members().size() == 4);
  CHECK_THROWS_AS(SimpleFn(I, coords(2, "W"), {Piece{MeasurableSet::cells(0, {0}), v}}), Error);
}

TEST_CASE("s - s integrates to zero") {
  const auto V = coords(2);
  const auto X = atomsWithWeights({0.25, 0.5, 0.0, 0.25});
  std::mt19937_64 rng(1);
  const SimpleFn s = randomSimpleFn(rng, X, V);
  CHECK(integrateSimple(subtractSimple(s, s, X), X).isZero());
}

TEST_CASE("subtracting the zero function leaves s unchanged") {
  const auto V = coords(2);
  const auto X = MeasureSpace::interval(-1.0, 1.0, 4);
  const SimpleFn s(X, V, {Piece{MeasurableSet::cells(1, {0, 3}), vec(V, {1.0, 2.0})},
                          Piece{MeasurableSet::cells(2, {9}), vec(V, {Scalar(0, 1), -1.0})}});
  const SimpleFn d = subtractSimple(s, SimpleFn::zero(X, V), X);
  for (std::size_t c = 0; c < X.cellCount(4); ++c) {
    const Point pt{c, X.cellMidpoint(4, c)};
    CHECK(evalSimple(d, pt) == evalSimple(s, pt));
  }
}

TEST_CASE("subtraction agrees with pointwise differences on every atom") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 15;
    std::vector<double> w(n);
    for (auto& x : w) x = static_cast<double>(rng() % 4) / 4.0;
    const auto X = atomsWithWeights(w);
    const auto V = coords(1 + rng() % 4);
    const SimpleFn s = randomSimpleFn(rng, X, V);
    const SimpleFn t = randomSimpleFn(rng, X, V);
    const SimpleFn d = subtractSimple(s, t, X);
    for (std::size_t i = 0; i < n; ++i) {
      const Point pt{i, static_cast<double>(i)};
      // Oracle: look the value up in the piece lists directly.
      auto lookup = [&](const SimpleFn& f) {
        for (const auto& p : f.pieces()) {
          const auto m = p.set.members();
          if (std::binary_search(m.begin(), m.end(), i)) return p.value;
        }
        return Vector::zero(V);
      };
      CHECK(evalSimple(d, pt) == lookup(s) - lookup(t));
    }
  }
}

TEST_CASE("subtraction on intervals refines to the finer partition") {
  const auto V = coords(1);
  const auto X = MeasureSpace::interval(0.0, 1.0, 1);
  const SimpleFn s(X, V, {Piece{MeasurableSet::cells(1, {0}), vec(V, {1.0})}});
  const SimpleFn t(X, V, {Piece{MeasurableSet::cells(3, {1, 2, 6}), vec(V, {4.0})}});
  const SimpleFn d = subtractSimple(s, t, X);
  for (std::size_t c = 0; c < 8; ++c) {
    const Point pt{c, X.cellMidpoint(3, c)};
    CHECK(evalSimple(d, pt) == evalSimple(s, pt) - evalSimple(t, pt));
  }
  CHECK(integrateSimple(d, X)[0] == Scalar(0.5 - 1.5));
}

TEST_CASE("integral is linear") {
  std::mt19937_64 rng(4);
  const auto X = atomsWithWeights({0.125, 0.25, 0.0, 0.5, 0.125, 0.75});
  const auto V = coords(3);
  for (int trial = 0; trial < 50; ++trial) {
    const SimpleFn s = randomSimpleFn(rng, X, V);
    const SimpleFn t = randomSimpleFn(rng, X, V);
    const Scalar a(1.5, -0.5);
    const Scalar b(-0.25, 2.0);
    const Vector lhs = integrateSimple(combineSimple(a, s, b, t, X), X);
    const Vector rhs = a * integrateSimple(s, X) + b * integrateSimple(t, X);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(std::abs(lhs[k] - rhs[k]) <= 1e-12 * std::max(1.0, std::abs(rhs[k])));
    }
  }
}

TEST_CASE("seminorm estimate on simple functions") {
  std::mt19937_64 rng(8);
  const auto V = coords(3);
  const std::vector<Seminorm> ps = {supAll(V), Seminorm::weightedL1(V, {0, 1}, {1.0, 3.0}),
                                    Seminorm::absFunctional(V, {0, 2}, {1.0, Scalar(0, -1)})};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> w(1 + rng() % 10);
    for (auto& x : w) x = static_cast<double>(rng() % 8) / 8.0;
    const auto X = atomsWithWeights(w);
    const SimpleFn s = randomSimpleFn(rng, X, V);
    for (const auto& p : ps) {
      const double rhs = integrateReal([&](const Point& pt) { return p(evalSimple(s, pt)); }, X).value;
      CHECK(p(integrateSimple(s, X)) <= rhs + 1e-10);
      CHECK(integrateSeminorm(p, s, X) == doctest::Approx(rhs).epsilon(1e-14));
    }
  }
}

TEST_CASE("a partition of a probability space gives a convex combination") {
  const auto V = coords(2);
  const auto X = MeasureSpace::interval(0.0, 1.0, 4);
  const SimpleFn s(X, V, {Piece{MeasurableSet::cells(0, {0, 3}), vec(V, {1.0, 2.0})},
                          Piece{MeasurableSet::cells(1, {2, 3, 4}), vec(V, {0.0, 1.0})},
                          Piece{MeasurableSet::cells(1, {5}), vec(V, {-1.0, 1.0})}});
  const ConvexReport r = convexCombinationCheck(s, X);
  CHECK(r.precondition);
  CHECK(r.pass);
  CHECK(r.coefficients == std::vector<double>{0.5, 0.375, 0.125});
  Vector combo = Vector::zero(V);
  for (std::size_t j = 0; j < 3; ++j) combo += r.coefficients[j] * s.pieces()[j].value;
  CHECK(combo == integrateSimple(s, X));
}

TEST_CASE("convex check reports precondition violations") {
  const auto V = coords(1);
  const auto X = MeasureSpace::interval(0.0, 1.0, 4);
  const SimpleFn half(X, V, {Piece{MeasurableSet::cells(0, {0, 1}), vec(V, {1.0})}});
  CHECK_FALSE(convexCombinationCheck(half, X).precondition);
  const auto Y = MeasureSpace::interval(0.0, 2.0, 4);
  const SimpleFn all(Y, V, {Piece{MeasurableSet::cells(0, {0, 1, 2, 3}), vec(V, {1.0})}});
  CHECK_FALSE(convexCombinationCheck(all, Y).precondition);
}

TEST_CASE("two equal-mass pieces and a single covering piece") {
  const auto V = coords(1);
  const auto X = MeasureSpace::discrete({{"a", 0.5, 0.0}, {"b", 0.5, 1.0}});
  const SimpleFn two(X, V, {Piece{MeasurableSet::atoms({0}), vec(V, {1.0})},
                            Piece{MeasurableSet::atoms({1}), vec(V, {3.0})}});
  const ConvexReport r2 = convexCombinationCheck(two, X);
  CHECK(r2.pass);
  CHECK(r2.coefficients == std::vector<double>{0.5, 0.5});
  const SimpleFn one(X, V, {Piece{MeasurableSet::atoms({0, 1}), vec(V, {1.0})}});
  const ConvexReport r1 = convexCombinationCheck(one, X);
  CHECK(r1.pass);
  CHECK(r1.coefficients == std::vector<double>{1.0});
}

TEST_CASE("simple functions serialise as set descriptors and payloads") {
  const auto V = coords(1);
  const auto X = MeasureSpace::interval(0.0, 1.0, 2);
  const SimpleFn s(X, V, {Piece{MeasurableSet::cells(1, {1, 2}), vec(V, {Scalar(1.0, -2.0)})}});
  const auto j = toJson(s);
  CHECK(j["space"] == "V");
  REQUIRE(j["pieces"].size() == 1);
  CHECK(j["pieces"][0]["set"]["kind"] == "cells");
  CHECK(j["pieces"][0]["set"]["level"] == 1);
  CHECK(j["pieces"][0]["set"]["members"] == nlohmann::json::array({1, 2}));
  CHECK(j["pieces"][0]["value"]["values"][0] == nlohmann::json::array({1.0, -2.0}));
}

}  // TEST_SUITE
