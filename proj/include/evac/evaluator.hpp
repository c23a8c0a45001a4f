#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "evac/errors.hpp"
#include "evac/geometry.hpp"
#include "evac/numeric.hpp"
#include "evac/strategy.hpp"

namespace evac::evaluator {

using geometry::ArcSet;
using geometry::PlanarPoint;
using strategy::StrategyS;

struct CoverageEvent {
  enum class Kind { Start, Stop };
  double time = 0.0;  // absolute
  int servant = 0;
  Kind kind = Kind::Start;
  double angle = 0.0;
};

/// One servant's searched arc: from its start angle, `length` radians in
/// direction sigma, finishing at `stop_time` (absolute).
struct SearchSegment {
  int servant = 0;
  double phi = 0.0;
  int sigma = +1;
  double length = 0.0;
  double stop_time = 1.0;
};

struct CoverageTimeline {
  std::vector<CoverageEvent> events;     // time-ordered
  std::vector<SearchSegment> segments;   // indexed by servant
  std::optional<double> finish_time;     // absent when never covered
};

/// Event-driven coverage simulation. Servants start searching at t = 1; a
/// frontier stops at the first point discovered strictly earlier by another
/// robot (foreign start points count, own start point does not), and two
/// frontiers meeting head-on stop at the midpoint of their gap. Because a
/// frontier always stops at a foreign start point, coverage decomposes into
/// the circular gaps between distinct start angles; each gap is covered by
/// the servants entering it from its two ends, exactly.
inline CoverageTimeline coverage_timeline(const StrategyS& s) {
  CoverageTimeline tl;
  const int n = static_cast<int>(s.servants.size());
  tl.segments.resize(n);
  for (int k = 0; k < n; ++k) {
    tl.segments[k] = {k, s.servants[k].phi, s.servants[k].sigma, 0.0, 1.0};
    tl.events.push_back({1.0, k, CoverageEvent::Kind::Start,
                         geometry::normalize_angle(s.servants[k].phi)});
  }

  // Group servants by canonical start angle (1e-12 tolerance).
  std::vector<std::pair<double, int>> order;
  for (int k = 0; k < n; ++k) {
    order.emplace_back(geometry::normalize_angle(s.servants[k].phi), k);
  }
  std::sort(order.begin(), order.end());
  std::vector<double> angles;          // distinct canonical start angles
  std::vector<std::vector<int>> at;    // servants at each distinct angle
  for (const auto& [a, k] : order) {
    if (angles.empty() || a - angles.back() > kGeomTol) {
      angles.push_back(a);
      at.emplace_back();
    }
    at.back().push_back(k);
  }
  const int g = static_cast<int>(angles.size());

  bool all_covered = true;
  double finish = 1.0;
  for (int i = 0; i < g; ++i) {
    const int j = (i + 1) % g;
    const double len = (g == 1) ? kTwoPi
                                : geometry::normalize_angle(angles[j] - angles[i]) == 0.0
                                      ? kTwoPi
                                      : geometry::normalize_angle(angles[j] - angles[i]);
    std::vector<int> ccw, cw;  // servants entering this gap from each end
    for (int k : at[i]) {
      if (s.servants[k].sigma == +1) ccw.push_back(k);
    }
    for (int k : at[j]) {
      if (s.servants[k].sigma == -1) cw.push_back(k);
    }
    double t_done = 0.0;
    if (!ccw.empty() && !cw.empty()) {
      const double half = 0.5 * len;
      t_done = 1.0 + half;
      for (int k : ccw) {
        tl.segments[k].length = half;
        tl.segments[k].stop_time = t_done;
      }
      for (int k : cw) {
        tl.segments[k].length = half;
        tl.segments[k].stop_time = t_done;
      }
    } else if (!ccw.empty()) {
      t_done = 1.0 + len;
      for (int k : ccw) {
        tl.segments[k].length = len;
        tl.segments[k].stop_time = t_done;
      }
    } else if (!cw.empty()) {
      t_done = 1.0 + len;
      for (int k : cw) {
        tl.segments[k].length = len;
        tl.segments[k].stop_time = t_done;
      }
    } else {
      all_covered = false;
    }
    finish = std::max(finish, t_done);
  }

  for (int k = 0; k < n; ++k) {
    const SearchSegment& seg = tl.segments[k];
    tl.events.push_back({seg.stop_time, k, CoverageEvent::Kind::Stop,
                         geometry::normalize_angle(seg.phi + seg.sigma * seg.length)});
  }
  std::stable_sort(tl.events.begin(), tl.events.end(),
                   [](const CoverageEvent& a, const CoverageEvent& b) {
                     if (a.time != b.time) return a.time < b.time;
                     return a.servant < b.servant;
                   });
  if (all_covered) tl.finish_time = finish;
  return tl;
}

/// Absolute time the first robot walks over theta.
inline double discovery_time(const CoverageTimeline& tl, double theta) {
  const double t = geometry::normalize_angle(theta);
  double best = std::numeric_limits<double>::infinity();
  for (const SearchSegment& seg : tl.segments) {
    const double from = geometry::normalize_angle(seg.phi);
    double off = seg.sigma > 0 ? t - from : from - t;
    off = geometry::normalize_angle(off);
    if (off <= seg.length + kGeomTol) {
      best = std::min(best, 1.0 + std::min(off, seg.length));
    }
  }
  if (!std::isfinite(best)) {
    throw NotCovered("point is never searched");
  }
  return best;
}

/// Queen's evacuation time for an exit at theta: discovery plus her
/// straight-line run from wherever the broadcast finds her.
inline double evac_time(const StrategyS& s, const CoverageTimeline& tl,
                        double theta) {
  const double d = discovery_time(tl, theta);
  return d + geometry::distance(s.queen.at(d), geometry::perimeter_point(theta));
}

inline double evac_time(const StrategyS& s, double theta) {
  return evac_time(s, coverage_timeline(s), theta);
}

/// (covered, finish_time): covered iff the searched arcs tile the circle.
inline std::pair<bool, std::optional<double>> verify_full_coverage(
    const CoverageTimeline& tl) {
  ArcSet seen;
  for (const SearchSegment& seg : tl.segments) {
    if (seg.length <= 0.0) continue;
    const double start = seg.sigma > 0 ? seg.phi : seg.phi - seg.length;
    seen.insert({geometry::normalize_angle(start), seg.length});
  }
  const bool covered = seen.total_length() >= kTwoPi - 1e-9;
  return {covered, covered ? tl.finish_time : std::nullopt};
}

struct EvacSample {
  double theta = 0.0;
  double discovery = 0.0;
  double evac = 0.0;
};

struct EvacProfile {
  std::vector<EvacSample> samples;  // sorted by theta
  double worst_theta = 0.0;
  double worst_evac = 0.0;
};

/// Adversary's answer: the exit-angle -> evacuation-time profile and its
/// global maximum. Candidates are the timeline breakpoints (nudged to both
/// sides; E jumps where searched arcs abut) plus a uniform grid; every local
/// maximum is refined by golden section.
inline EvacProfile worst_case(const StrategyS& s, int samples = 4096) {
  const CoverageTimeline tl = coverage_timeline(s);
  if (!verify_full_coverage(tl).first) {
    throw NeverCovered("strategy does not cover the circle");
  }
  constexpr double kNudge = 1e-9;

  std::vector<double> cand;
  cand.reserve(samples + 6 * tl.segments.size());
  for (const CoverageEvent& ev : tl.events) {
    cand.push_back(geometry::normalize_angle(ev.angle - kNudge));
    cand.push_back(ev.angle);
    cand.push_back(geometry::normalize_angle(ev.angle + kNudge));
  }
  for (int i = 0; i < samples; ++i) {
    cand.push_back(kTwoPi * i / samples);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  EvacProfile profile;
  profile.samples.reserve(cand.size());
  auto E = [&](double theta) { return evac_time(s, tl, theta); };
  for (double theta : cand) {
    const double d = discovery_time(tl, theta);
    const double e =
        d + geometry::distance(s.queen.at(d), geometry::perimeter_point(theta));
    profile.samples.push_back({theta, d, e});
    if (e > profile.worst_evac) {
      profile.worst_evac = e;
      profile.worst_theta = theta;
    }
  }

  // Refine each (circular) local maximum of the sampled profile.
  const std::size_t m = profile.samples.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double e = profile.samples[i].evac;
    const double ep = profile.samples[(i + m - 1) % m].evac;
    const double en = profile.samples[(i + 1) % m].evac;
    if (e < ep || e < en) continue;
    const double a = profile.samples[(i + m - 1) % m].theta;
    double b = profile.samples[(i + 1) % m].theta;
    if (b <= a) b += kTwoPi;  // unwrap across the seam
    const double t = golden_max(E, a, b, 1e-9);
    const double v = E(t);
    if (v > profile.worst_evac) {
      profile.worst_evac = v;
      profile.worst_theta = geometry::normalize_angle(t);
    }
  }
  return profile;
}

}  // namespace evac::evaluator
