#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "evac/strategy.hpp"

using namespace evac;
using namespace evac::strategy;

TEST_CASE("PiecewisePath interpolation and clamping") {
  PiecewisePath p({{0.0, {0.0, 0.0}}, {2.0, {2.0, 0.0}}, {3.0, {2.0, 1.0}}});
  CHECK(p.at(-1.0).x == Catch::Approx(0.0).margin(1e-15));
  CHECK(p.at(1.0).x == Catch::Approx(1.0));
  CHECK(p.at(2.5).y == Catch::Approx(0.5));
  CHECK(p.at(10.0).x == Catch::Approx(2.0));
  CHECK(p.at(10.0).y == Catch::Approx(1.0));
  CHECK(p.max_segment_speed() == Catch::Approx(1.0));
  CHECK(p.times_strictly_increase());

  PiecewisePath bad({{0.0, {0.0, 0.0}}, {0.0, {1.0, 0.0}}});
  CHECK_FALSE(bad.times_strictly_increase());
}

TEST_CASE("queen_path timing") {
  const auto q = queen_path(0.5);
  CHECK(q.at(0.0).x == Catch::Approx(0.0).margin(1e-15));
  CHECK(q.at(1.5).x == Catch::Approx(0.0).margin(1e-15));
  CHECK(q.at(2.0).x == Catch::Approx(-0.5));
  CHECK(q.at(2.5).x == Catch::Approx(-1.0));
  CHECK(q.at(5.0).x == Catch::Approx(-1.0));
  CHECK(q.max_segment_speed() == Catch::Approx(1.0));
  CHECK_THROWS_AS(queen_path(-0.1), NegativeAlpha);
}

TEST_CASE("servant_position") {
  const ServantSpec ccw{0.0, +1};
  const auto p = servant_position(ccw, 1.0 + kPi / 2.0);
  CHECK(p.x == Catch::Approx(0.0).margin(1e-12));
  CHECK(p.y == Catch::Approx(1.0));

  const ServantSpec cw{0.0, -1};
  const auto q = servant_position(cw, 1.0 + kPi / 2.0);
  CHECK(q.y == Catch::Approx(-1.0));

  CHECK_THROWS_AS(servant_position(ccw, 0.5), BeforePerimeter);
}

TEST_CASE("trivial_strategy layout") {
  const auto s = trivial_strategy(6);
  REQUIRE(s.servants.size() == 6);
  CHECK(s.servants[1].phi == Catch::Approx(kTwoPi / 6.0));
  for (const auto& spec : s.servants) CHECK(spec.sigma == 1);
  CHECK(validate(s).empty());
  CHECK_FALSE(s.alpha.has_value());
  CHECK(s.queen.at(100.0).x == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("trivial_sym_strategy layout and odd rejection") {
  const auto s = trivial_sym_strategy(4);
  REQUIRE(s.servants.size() == 4);
  CHECK(validate(s).empty());
  int ccw = 0, cw = 0;
  for (const auto& spec : s.servants) (spec.sigma == 1 ? ccw : cw)++;
  CHECK(ccw == 2);
  CHECK(cw == 2);
  CHECK_THROWS_AS(trivial_sym_strategy(5), OddNotSupported);
}

TEST_CASE("expand_sym even and odd") {
  {
    SymSpec spec{4, {0.3, 1.2}, 0.5};
    const auto s = expand_sym(spec);
    REQUIRE(s.servants.size() == 4);
    CHECK(s.alpha == Catch::Approx(0.5));
    CHECK(s.servants.front().phi == Catch::Approx(-1.2));
    CHECK(s.servants.front().sigma == -1);
    CHECK(s.servants.back().phi == Catch::Approx(1.2));
    CHECK(s.servants.back().sigma == 1);
    CHECK(validate(s).empty());
  }
  {
    SymSpec spec{5, {-0.4, 0.3, 1.2}, 0.5};
    const auto s = expand_sym(spec);
    REQUIRE(s.servants.size() == 5);
    // The first angle is self-symmetric and appears once, counter-clockwise.
    int found = 0;
    for (const auto& sv : s.servants) {
      if (std::fabs(sv.phi + 0.4) < 1e-12) {
        ++found;
        CHECK(sv.sigma == 1);
      }
    }
    CHECK(found == 1);
    CHECK(validate(s).empty());
  }
}

TEST_CASE("validate reports violations") {
  StrategyS s = trivial_strategy(4);
  s.servants.pop_back();
  auto v = validate(s);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "CountViolation");

  s = trivial_strategy(4);
  s.servants[0].sigma = 0;
  v = validate(s);
  CHECK(v[0] == "DirectionViolation");

  s = trivial_strategy(4);
  std::swap(s.servants[0], s.servants[2]);
  v = validate(s);
  CHECK(v[0] == "OrderViolation");

  s = trivial_strategy(4);
  s.queen = PiecewisePath({{0.0, {0.0, 0.0}}, {1.0, {2.0, 0.0}}});
  v = validate(s);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "SpeedViolation");

  s = trivial_strategy(4);
  s.queen = PiecewisePath(std::vector<PiecewisePath::Waypoint>{{0.0, {0.5, 0.0}}});
  v = validate(s);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "QueenStartViolation");
}
