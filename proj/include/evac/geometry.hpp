#pragma once

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "evac/errors.hpp"
#include "evac/numeric.hpp"

namespace evac::geometry {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const PlanarPoint& a, const PlanarPoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Wrap an angle into [0, 2pi). Idempotent on canonical input.
inline double normalize_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod roundoff at the seam
  return r;
}

/// Angular distance between two directions, in [0, pi].
inline double angular_distance(double a, double b) {
  double d = std::fabs(normalize_angle(a) - normalize_angle(b));
  return std::min(d, kTwoPi - d);
}

inline PlanarPoint perimeter_point(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

/// Chord length between two points of the unit circle: 2 sin(delta/2).
inline double chord_length(double theta_a, double theta_b) {
  return 2.0 * std::sin(0.5 * angular_distance(theta_a, theta_b));
}

struct ChordIntersection {
  double d_far = 0.0;   // origin distance of the farther intersection point
  double d_near = 0.0;  // origin distance of the nearer one (absolute value)
};

/// Two circles of radius r centered on unit-circle points joined by a chord
/// of length delta meet at two points on the chord's perpendicular bisector;
/// returns their distances from the origin.
inline ChordIntersection circle_circle_from_chord(double delta, double r) {
  if (delta <= 0.0 || delta > 2.0) {
    throw DegenerateChord("chord length must lie in (0, 2]");
  }
  if (r <= 0.5 * delta) {
    throw NoIntersection("circle radius must exceed half the chord");
  }
  const double half_sq = 0.25 * delta * delta;
  const double ec = std::sqrt(r * r - half_sq);
  const double oe = std::sqrt(std::max(1.0 - half_sq, 0.0));
  return {oe + ec, std::fabs(ec - oe)};
}

/// Radius of the origin-centered disk containing every point within r of all
/// points of an unexplored perimeter set of total length phi.
inline double containment_radius(double r, double phi) {
  const double s = std::sin(0.5 * phi);
  if (r < s) {
    throw EmptyIntersection("no point is within r of all unexplored points");
  }
  return std::sqrt(std::max(r * r - s * s, 0.0)) + std::cos(0.5 * phi);
}

/// Counter-clockwise arc on the unit circle.
struct Arc {
  double start = 0.0;   // canonical, [0, 2pi)
  double length = 0.0;  // (0, 2pi]
};

/// Disjoint union of arcs. Inserted arcs that overlap or touch are merged;
/// the stored list is sorted by start angle.
class ArcSet {
 public:
  ArcSet() = default;

  void insert(const Arc& arc) {
    if (arc.length <= 0.0) return;
    if (arc.length >= kTwoPi - kGeomTol) {
      arcs_ = {Arc{0.0, kTwoPi}};
      return;
    }
    // Work on [0, 2pi] intervals; split arcs crossing the seam.
    std::vector<std::pair<double, double>> iv;
    auto push = [&iv](double s, double len) {
      const double e = s + len;
      if (e <= kTwoPi + kGeomTol) {
        iv.emplace_back(s, std::min(e, kTwoPi));
      } else {
        iv.emplace_back(s, kTwoPi);
        iv.emplace_back(0.0, e - kTwoPi);
      }
    };
    for (const Arc& a : arcs_) push(a.start, a.length);
    push(normalize_angle(arc.start), arc.length);

    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& [s, e] : iv) {
      if (!merged.empty() && s <= merged.back().second + kGeomTol) {
        merged.back().second = std::max(merged.back().second, e);
      } else {
        merged.emplace_back(s, e);
      }
    }
    // Merge across the seam.
    bool wrap = merged.size() > 1 && merged.front().first <= kGeomTol &&
                merged.back().second >= kTwoPi - kGeomTol;
    arcs_.clear();
    if (merged.size() == 1 && merged[0].second - merged[0].first >= kTwoPi - kGeomTol) {
      arcs_ = {Arc{0.0, kTwoPi}};
      return;
    }
    if (wrap) {
      const double tail_start = merged.back().first;
      const double head_end = merged.front().second;
      const double len = (kTwoPi - tail_start) + head_end;
      if (len >= kTwoPi - kGeomTol) {
        arcs_ = {Arc{0.0, kTwoPi}};
        return;
      }
      for (std::size_t i = 1; i + 1 < merged.size(); ++i) {
        arcs_.push_back(Arc{merged[i].first, merged[i].second - merged[i].first});
      }
      arcs_.push_back(Arc{tail_start, len});
      std::sort(arcs_.begin(), arcs_.end(),
                [](const Arc& a, const Arc& b) { return a.start < b.start; });
    } else {
      for (const auto& [s, e] : merged) {
        arcs_.push_back(Arc{s, e - s});
      }
    }
  }

  double total_length() const {
    double sum = 0.0;
    for (const Arc& a : arcs_) sum += a.length;
    return std::min(sum, kTwoPi);
  }

  bool contains(double theta) const {
    const double t = normalize_angle(theta);
    for (const Arc& a : arcs_) {
      double off = t - a.start;
      if (off < -kGeomTol) off += kTwoPi;
      if (off >= -kGeomTol && off <= a.length + kGeomTol) return true;
    }
    return false;
  }

  /// Length of the overlap between this set and the ccw interval
  /// [from, from + len].
  double overlap_length(double from, double len) const {
    const double f = normalize_angle(from);
    double sum = 0.0;
    for (const Arc& a : arcs_) {
      // Compare on an unwrapped axis anchored at `f`.
      for (double shift : {0.0, kTwoPi}) {
        double s = a.start - f + shift;
        const double lo = std::max(s, 0.0);
        const double hi = std::min(s + a.length, len);
        if (hi > lo) sum += hi - lo;
      }
    }
    return std::min(sum, len);
  }

  bool empty() const { return arcs_.empty(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  std::vector<Arc> arcs_;
};

struct PerimeterGap {
  double theta_a = 0.0;
  double theta_b = 0.0;
  double gap = 0.0;
};

/// Two points of the unexplored set whose perimeter distance, measured
/// through a side containing unexplored content, is maximal. For a full
/// circle the canonical answer is an antipodal pair.
inline PerimeterGap max_perimeter_gap(const ArcSet& unexplored) {
  if (unexplored.total_length() <= 0.0) {
    throw EmptySet("max_perimeter_gap of an empty set");
  }
  if (unexplored.total_length() >= kTwoPi - kGeomTol) {
    return {0.0, kPi, kPi};
  }
  std::vector<double> pts;
  for (const Arc& a : unexplored.arcs()) {
    pts.push_back(a.start);
    pts.push_back(normalize_angle(a.start + a.length));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  PerimeterGap best{0.0, 0.0, -1.0};
  auto consider = [&best](double a, double b, double gap) {
    if (gap > best.gap + kGeomTol) {
      best = {a, b, gap};
    } else if (gap > best.gap - kGeomTol) {
      if (std::make_pair(a, b) < std::make_pair(best.theta_a, best.theta_b)) {
        best = {a, b, gap};
      }
    }
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double a = pts[i], b = pts[j];
      const double l1 = b - a;          // side a -> b ccw
      const double l2 = kTwoPi - l1;    // side b -> a ccw
      const bool e1 = unexplored.overlap_length(a, l1) > kGeomTol;
      const bool e2 = unexplored.overlap_length(b, l2) > kGeomTol;
      if (e1 && e2) {
        consider(a, b, std::min(l1, l2));
      } else if (e1) {
        consider(a, b, l1);
      } else if (e2) {
        consider(a, b, l2);
      }
    }
  }
  if (best.gap < 0.0) {
    // Single isolated arc whose endpoints coincide numerically; fall back to
    // the arc itself.
    const Arc& a = unexplored.arcs().front();
    return {a.start, normalize_angle(a.start + a.length), a.length};
  }
  return best;
}

}  // namespace evac::geometry
