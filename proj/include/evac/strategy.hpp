#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "evac/errors.hpp"
#include "evac/geometry.hpp"
#include "evac/numeric.hpp"

namespace evac::strategy {

using geometry::PlanarPoint;

/// Piecewise-linear constant-speed trajectory. Queries clamp to the first and
/// last waypoints.
class PiecewisePath {
 public:
  struct Waypoint {
    double t = 0.0;
    PlanarPoint p;
  };

  PiecewisePath() : waypoints_{{0.0, {0.0, 0.0}}} {}
  explicit PiecewisePath(std::vector<Waypoint> waypoints)
      : waypoints_(std::move(waypoints)) {}

  PlanarPoint at(double t) const {
    if (waypoints_.empty()) return {0.0, 0.0};
    if (t <= waypoints_.front().t) return waypoints_.front().p;
    if (t >= waypoints_.back().t) return waypoints_.back().p;
    for (std::size_t i = 1; i < waypoints_.size(); ++i) {
      if (t <= waypoints_[i].t) {
        const auto& a = waypoints_[i - 1];
        const auto& b = waypoints_[i];
        const double u = (t - a.t) / (b.t - a.t);
        return {a.p.x + u * (b.p.x - a.p.x), a.p.y + u * (b.p.y - a.p.y)};
      }
    }
    return waypoints_.back().p;
  }

  double max_segment_speed() const {
    double v = 0.0;
    for (std::size_t i = 1; i < waypoints_.size(); ++i) {
      const auto& a = waypoints_[i - 1];
      const auto& b = waypoints_[i];
      v = std::max(v, geometry::distance(a.p, b.p) / (b.t - a.t));
    }
    return v;
  }

  bool times_strictly_increase() const {
    for (std::size_t i = 1; i < waypoints_.size(); ++i) {
      if (waypoints_[i].t <= waypoints_[i - 1].t) return false;
    }
    return true;
  }

  const std::vector<Waypoint>& waypoints() const { return waypoints_; }

 private:
  std::vector<Waypoint> waypoints_;
};

struct ServantSpec {
  double phi = 0.0;  // start angle on the perimeter, radians
  int sigma = +1;    // +1 counter-clockwise, -1 clockwise
};

/// A class-S strategy: queen path plus servant start angles and directions.
/// All times are absolute (t = 0 at the center, perimeter reached at t = 1).
struct StrategyS {
  int n = 0;
  PiecewisePath queen;
  std::vector<ServantSpec> servants;
  /// Set when the queen path is the parametric delayed-departure path; kept
  /// for serialization (the JSON form omits the waypoints then).
  std::optional<double> alpha;
};

/// Mirror-symmetric specification: upper-half start angles plus the queen's
/// departure delay (perimeter time).
struct SymSpec {
  int n = 0;
  std::vector<double> phi_plus;  // ceil(n/2) angles in [-pi, pi]
  double alpha = 0.0;
};

/// Queen trajectory in absolute time: rest at the origin until 1 + alpha,
/// unit speed along the negative x-axis, rest at (-1, 0).
inline PiecewisePath queen_path(double alpha) {
  if (alpha < 0.0) throw NegativeAlpha("queen departure delay must be >= 0");
  return PiecewisePath({{0.0, {0.0, 0.0}},
                        {1.0 + alpha, {0.0, 0.0}},
                        {2.0 + alpha, {-1.0, 0.0}}});
}

/// Search position at absolute time t, ignoring stop events.
inline PlanarPoint servant_position(const ServantSpec& spec, double t) {
  if (t < 1.0 - kGeomTol) {
    throw BeforePerimeter("servant is not on the perimeter before t = 1");
  }
  const double a = spec.phi + spec.sigma * (t - 1.0);
  return {std::cos(a), std::sin(a)};
}

/// n equally spaced servants, all counter-clockwise, queen parked at the
/// origin.
inline StrategyS trivial_strategy(int n) {
  StrategyS s;
  s.n = n;
  s.queen = PiecewisePath();  // fixed at the origin
  for (int k = 0; k < n; ++k) {
    s.servants.push_back({kTwoPi * k / n, +1});
  }
  return s;
}

inline void sort_servants(std::vector<ServantSpec>& servants) {
  std::stable_sort(servants.begin(), servants.end(),
                   [](const ServantSpec& a, const ServantSpec& b) {
                     if (a.phi != b.phi) return a.phi < b.phi;
                     return a.sigma < b.sigma;  // sigma = -1 first
                   });
}

/// Mirror-symmetric version of the trivial strategy (even n only): the upper
/// half searches counter-clockwise, the lower half is its reflection.
inline StrategyS trivial_sym_strategy(int n) {
  if (n < 2 || n % 2 != 0) {
    throw OddNotSupported("symmetric trivial baseline requires even n >= 2");
  }
  StrategyS s;
  s.n = n;
  s.queen = PiecewisePath();
  for (int k = 0; k < n / 2; ++k) {
    const double phi = kTwoPi * k / n;
    s.servants.push_back({phi, +1});
    s.servants.push_back({-phi, -1});
  }
  sort_servants(s.servants);
  return s;
}

/// Expand a symmetric spec to the full servant list; for odd n the first
/// servant is self-symmetric and is not mirrored.
inline StrategyS expand_sym(const SymSpec& spec) {
  StrategyS s;
  s.n = spec.n;
  s.queen = queen_path(spec.alpha);
  s.alpha = spec.alpha;
  const bool odd = spec.n % 2 != 0;
  for (std::size_t k = 0; k < spec.phi_plus.size(); ++k) {
    const double phi = spec.phi_plus[k];
    s.servants.push_back({phi, +1});
    if (!(odd && k == 0)) {
      s.servants.push_back({-phi, -1});
    }
  }
  sort_servants(s.servants);
  return s;
}

/// Invariant check; an empty result means the strategy is well-formed.
inline std::vector<std::string> validate(const StrategyS& s) {
  std::vector<std::string> violations;
  if (s.n <= 0 || static_cast<std::size_t>(s.n) != s.servants.size()) {
    violations.emplace_back("CountViolation");
  }
  for (std::size_t k = 0; k < s.servants.size(); ++k) {
    if (s.servants[k].sigma != 1 && s.servants[k].sigma != -1) {
      violations.emplace_back("DirectionViolation");
      break;
    }
  }
  for (std::size_t k = 1; k < s.servants.size(); ++k) {
    if (s.servants[k].phi < s.servants[k - 1].phi) {
      violations.emplace_back("OrderViolation");
      break;
    }
  }
  if (!s.queen.times_strictly_increase()) {
    violations.emplace_back("TimeOrderViolation");
  } else if (s.queen.max_segment_speed() > 1.0 + kGeomTol) {
    violations.emplace_back("SpeedViolation");
  }
  const PlanarPoint q0 = s.queen.at(0.0);
  if (std::hypot(q0.x, q0.y) > kGeomTol) {
    violations.emplace_back("QueenStartViolation");
  }
  return violations;
}

}  // namespace evac::strategy
