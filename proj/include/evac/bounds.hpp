#pragma once

#include <cmath>
#include <limits>
#include <optional>

#include "evac/errors.hpp"
#include "evac/numeric.hpp"

namespace evac::bounds {

/// One row of the bounds table. `T_alg` is absent until an instance has been
/// solved numerically.
struct BoundsRow {
  int n = 0;
  std::optional<double> T_alg;
  double ub = 0.0;
  double lb = 0.0;
  double naive_ub = 0.0;
  double naive_lb = 0.0;
};

namespace detail {

// Real-valued closed forms; the CLI's --dense plotting grid evaluates these
// at non-integer n.
inline double ub_value(double n) {
  return 2.0 + 4.0 * (std::sqrt(2.0) - 1.0) * kPi / n;
}

inline double lb_value(double n) {
  return 1.0 + (2.0 / n) * std::acos(-2.0 / n) + std::sqrt(1.0 - 4.0 / (n * n));
}

inline double naive_ub_value(double n) { return 2.0 + kTwoPi / n; }
inline double naive_lb_value(double n) { return 2.0 + kPi / (n + 1.0); }

}  // namespace detail

/// Upper bound 2 + 4(sqrt(2)-1) pi/n.
inline double ub_theorem1(int n) {
  if (n < 4) throw UnsupportedN("upper-bound theorem requires n >= 4");
  return detail::ub_value(n);
}

/// Lower bound 1 + (2/n) arccos(-2/n) + sqrt(1 - 4/n^2).
inline double lb_theorem2(int n) {
  if (n < 4) throw UnsupportedN("lower-bound theorem requires n >= 4");
  return detail::lb_value(n);
}

/// Large-n expansion of the lower bound.
inline double lb_asymptotic(int n) {
  return 2.0 + kPi / n + 2.0 / (static_cast<double>(n) * n);
}

inline double naive_ub(int n) { return detail::naive_ub_value(n); }
inline double naive_lb(int n) { return detail::naive_lb_value(n); }

/// f(x) = 1 + x + sin(nx/2): evacuation-time bound when the queen does not
/// search before time 1 + x.
inline double lb1_value(int n, double x) {
  if (x < kPi / n - kGeomTol || x >= kTwoPi / n) {
    throw OutOfRange("x must lie in [pi/n, 2pi/n)");
  }
  return 1.0 + x + std::sin(0.5 * n * x);
}

/// Interior maximizer x* = (2/n) arccos(-2/n) of lb1_value.
inline double lb1_maximizer(int n) {
  if (n < 2) throw UnsupportedN("maximizer requires n >= 2");
  return (2.0 / n) * std::acos(-2.0 / n);
}

/// Containment radius of the queen at time t when the servants have searched
/// at full collective rate: R(t) = sqrt((T-t)^2 - sin^2(n(t-1)/2)) -
/// cos(n(t-1)/2).
inline double queen_radius_bound(int n, double T, double t) {
  const double h = 0.5 * n * (t - 1.0);
  const double s = std::sin(h);
  // Factored radicand: at the certificate point T - t and sin h coincide and
  // the naive square difference is pure cancellation noise whose square root
  // would dominate the result. A factor within input roundoff of zero is
  // snapped to zero.
  double lo = T - t - s;
  const double hi = T - t + s;
  const double snap =
      32.0 * std::numeric_limits<double>::epsilon() * (std::fabs(T) + std::fabs(t) + std::fabs(s));
  if (std::fabs(lo) <= snap) lo = 0.0;
  const double rad = lo * hi;
  if (rad < -kGeomTol) {
    throw NegativeRadicand("containment region is empty");
  }
  return std::sqrt(std::max(rad, 0.0)) - std::cos(h);
}

/// Algebraic identity closing the lower-bound proof: at T = lb_theorem2(n)
/// and t = 1 + lb1_maximizer(n), the queen's containment radius collapses to
/// 2/n, which is below 1 for n >= 4.
inline bool certificate_check(int n) {
  if (n < 4) throw UnsupportedN("certificate requires n >= 4");
  const double r = queen_radius_bound(n, lb_theorem2(n), 1.0 + lb1_maximizer(n));
  return std::fabs(r - 2.0 / n) < 1e-9 && 2.0 / n < 1.0;
}

/// Assemble one table row (without the solved T).
inline BoundsRow make_row(int n) {
  BoundsRow row;
  row.n = n;
  row.ub = ub_theorem1(n);
  row.lb = lb_theorem2(n);
  row.naive_ub = naive_ub(n);
  row.naive_lb = naive_lb(n);
  return row;
}

}  // namespace evac::bounds
