#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "evac/errors.hpp"

namespace evac {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute tolerance for geometric identities.
inline constexpr double kGeomTol = 1e-12;

/// Bisection on [lo, hi] where the endpoint signs are known a priori and the
/// endpoints themselves are never evaluated (f may diverge or be defined only
/// in the limit there). `negative_at_lo` gives the sign of f just inside lo.
template <class F>
double bisect_known(F&& f, double lo, double hi, bool negative_at_lo,
                    double xtol) {
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at machine resolution
    if ((f(mid) < 0.0) == negative_at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Bisection with endpoint evaluation; throws BracketFailure when the
/// endpoints do not bracket a sign change.
template <class F>
double bisect(F&& f, double lo, double hi, double xtol) {
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw BracketFailure("bisect: endpoints do not bracket a sign change");
  }
  return bisect_known(f, lo, hi, flo < 0.0, xtol);
}

/// Golden-section minimization of f on [a, b]; returns the midpoint of the
/// final interval once its width drops below xtol.
template <class F>
double golden_min(F&& f, double a, double b, double xtol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    if (c >= d) break;  // machine resolution
  }
  return 0.5 * (a + b);
}

/// Golden-section maximization.
template <class F>
double golden_max(F&& f, double a, double b, double xtol) {
  return golden_min([&](double x) { return -f(x); }, a, b, xtol);
}

}  // namespace evac
