#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "evac/errors.hpp"
#include "evac/geometry.hpp"
#include "evac/numeric.hpp"
#include "evac/strategy.hpp"

namespace evac::chase {

using geometry::PlanarPoint;

/// Optimal asymptotic constants: alpha ~ a pi/n and rho ~ q pi/n.
inline constexpr double kAlphaConstant = 2.0 * (2.0 - 1.4142135623730951);
inline constexpr double kRhoConstant = 2.0 * (3.0 * 1.4142135623730951 - 4.0);

/// Solver tolerances. Each nesting level is one to two orders looser than the
/// level below it.
inline constexpr double kInnerTol = 1e-12;  // stop times and tau
inline constexpr double kRhoTol = 1e-13;    // rho bisection interval
inline constexpr double kAlphaTol = 1e-9;   // outer minimization

/// A fully solved IntersectChase instance. All stored times are perimeter
/// time (t = 0 when the servants reach the perimeter).
struct ChaseParams {
  int n = 0;
  double alpha = 0.0;  // queen departure delay
  double rho = 0.0;    // radius of C_Q when the queen reaches the perimeter
  double gamma = 0.0;  // first intersection time, alpha + rho/2
  double tau = 0.0;    // time at which the intercept slows to unit speed
  std::vector<double> stop_times;    // t_1 .. t_{ceil(n/2)-1}
  std::vector<double> start_angles;  // phi_1 .. phi_{ceil(n/2)}
  double T_p = 0.0;  // 1 + alpha + rho
  double T = 0.0;    // T_p + 1
};

namespace detail {

inline void check_window(double alpha, double rho, double t, bool open) {
  const double s = t - alpha;
  const double lo = 0.5 * rho;
  const double hi = 0.5 * (rho + 2.0);
  if (open ? (s <= lo || s >= hi) : (s < lo - kGeomTol || s > hi + kGeomTol)) {
    throw OutOfWindow("time outside the intercept window");
  }
}

/// Radicand of the intercept's y-coordinate, clamped against window-endpoint
/// roundoff.
inline double y_radicand(double rho, double s) {
  const double rad = rho * (rho + 2.0) * (2.0 * s - rho) * (rho + 2.0 - 2.0 * s);
  if (rad < -kGeomTol) {
    throw OutOfWindow("negative radicand: time outside the intercept window");
  }
  return std::max(rad, 0.0);
}

/// q(s) = s^2 (rho+2-2s)(2s-rho); the intercept speed is
/// sqrt(rho(rho+2)/q(s)), so nu_A = 1 at q(s) = rho(rho+2).
inline double speed_quartic(double rho, double s) {
  return s * s * (rho + 2.0 - 2.0 * s) * (2.0 * s - rho);
}

}  // namespace detail

/// Intercept A_+ coordinates at perimeter time t (the two-circle
/// construction).
inline PlanarPoint intercept_position(double alpha, double rho, double t) {
  detail::check_window(alpha, rho, t, /*open=*/false);
  const double s = t - alpha;
  const double x = rho * (2.0 + rho) / (2.0 * s) - 1.0 - rho;
  const double y = std::sqrt(detail::y_radicand(rho, s)) / (2.0 * s);
  return {x, y};
}

/// Angular position of A_+ in [0, pi]. Uses the two-argument arctangent; the
/// bare ratio y/x is quadrant-ambiguous once x turns negative.
inline double intercept_angle(double alpha, double rho, double t) {
  const PlanarPoint p = intercept_position(alpha, rho, t);
  return std::atan2(p.y, p.x);
}

/// Perimeter speed of A_+; diverges at both window endpoints.
inline double intercept_speed(double alpha, double rho, double t) {
  detail::check_window(alpha, rho, t, /*open=*/true);
  const double s = t - alpha;
  return std::sqrt(rho * (rho + 2.0) / detail::speed_quartic(rho, s));
}

/// Puiseux seed for tau (valid as rho -> 0); diagnostic only.
inline double puiseux_tau(double rho) {
  const double h = std::cbrt(0.5 * rho);
  return h + h * h / 3.0;
}

/// Time on the decreasing branch of nu_A where nu_A = 1. Works on the
/// quartic q(s) = s^2 (rho+2-2s)(2s-rho): locate its maximizer, then bisect
/// q - rho(rho+2) on the increasing branch.
inline double solve_tau(double alpha, double rho) {
  if (rho <= 0.0) throw InfeasibleRho("rho must be positive");
  const double lo = 0.5 * rho;
  const double hi = 0.5 * (rho + 2.0);
  auto q = [rho](double s) { return detail::speed_quartic(rho, s); };
  const double s_max = golden_max(q, lo, hi, kInnerTol);
  const double target = rho * (rho + 2.0);
  if (q(s_max) < target) {
    throw InfeasibleRho("intercept never slows to unit speed");
  }
  const double s = bisect_known([&](double x) { return q(x) - target; }, lo,
                                s_max, /*negative_at_lo=*/true, kInnerTol);
  return alpha + s;
}

struct StopChain {
  double tau = 0.0;
  std::vector<double> stop_times;    // t_1 .. t_{m-1}, m = ceil(n/2)
  std::vector<double> start_angles;  // phi_1 .. phi_m
};

/// Sequentially solves the stop-time recurrence phi_k + t = phi_A(t) on
/// (gamma, tau]. Each equation is strictly increasing there since
/// nu_A - 1 > 0 on (gamma, tau).
inline StopChain solve_stop_times(int n, double alpha, double rho) {
  if (n < 4) throw UnsupportedN("IntersectChase requires n >= 4");
  StopChain chain;
  chain.tau = solve_tau(alpha, rho);
  const double gamma = alpha + 0.5 * rho;
  const double tau = chain.tau;
  const int m = (n + 1) / 2;
  // phi_A(gamma) = 0 in the limit, so every chain equation is negative at the
  // left endpoint; bisect with known endpoint signs.
  auto solve_root = [&](auto&& g) {
    if (g(tau) < 0.0) {
      throw NoRoot("servant cannot be intercepted by tau");
    }
    return bisect_known(g, gamma, tau, /*negative_at_lo=*/true, kInnerTol);
  };
  if (n % 2 == 0) {
    chain.start_angles.push_back(0.0);
  } else {
    // phi_1 = -t_1/2 substituted into the k = 1 condition.
    const double t1 = solve_root(
        [&](double t) { return intercept_angle(alpha, rho, t) - 0.5 * t; });
    chain.stop_times.push_back(t1);
    chain.start_angles.push_back(-0.5 * t1);
    chain.start_angles.push_back(0.5 * t1);
  }
  while (static_cast<int>(chain.start_angles.size()) < m) {
    const double phi_k = chain.start_angles.back();
    const double tk = solve_root([&](double t) {
      return intercept_angle(alpha, rho, t) - phi_k - t;
    });
    chain.stop_times.push_back(tk);
    chain.start_angles.push_back(phi_k + tk);
  }
  return chain;
}

/// Coincidence defect of the last servant: F = phi_A(tau) - tau - phi_m.
/// Zero at the correct rho.
inline double residual(int n, double alpha, double rho) {
  const StopChain chain = solve_stop_times(n, alpha, rho);
  return intercept_angle(alpha, rho, chain.tau) - chain.tau -
         chain.start_angles.back();
}

namespace detail {

/// residual with inner-solve failures mapped to a negative sentinel. Both
/// failure modes (InfeasibleRho, NoRoot) occur on the large-rho side of the
/// solution, where the true residual is negative.
inline double residual_or_sentinel(int n, double alpha, double rho) {
  try {
    return residual(n, alpha, rho);
  } catch (const InfeasibleRho&) {
    return -1.0;
  } catch (const NoRoot&) {
    return -1.0;
  }
}

}  // namespace detail

/// Solves residual(n, alpha, rho) = 0 by bracketed bisection. The initial
/// bracket is centered on the asymptotic seed q pi/n and expanded
/// geometrically. Throws BracketFailure when no genuine root exists (the
/// sentinel can fabricate a sign change at the feasibility edge; the
/// converged residual is checked).
inline double solve_rho(int n, double alpha) {
  if (n < 4) throw UnsupportedN("IntersectChase requires n >= 4");
  auto F = [&](double rho) {
    return detail::residual_or_sentinel(n, alpha, rho);
  };
  const double seed = kRhoConstant * kPi / n;
  double lo = seed, hi = seed;
  double flo = F(seed), fhi = flo;
  for (int i = 0; i < 60 && !(flo > 0.0 && fhi <= 0.0); ++i) {
    if (flo <= 0.0) {
      lo *= 0.5;
      flo = F(lo);
    }
    if (fhi > 0.0) {
      hi *= 2.0;
      fhi = F(hi);
    }
  }
  if (!(flo > 0.0 && fhi <= 0.0)) {
    throw BracketFailure("no sign change bracket for rho");
  }
  double rho = bisect_known(F, lo, hi, /*negative_at_lo=*/false,
                            std::max(kRhoTol, 1e-15 * hi));
  if (std::fabs(detail::residual_or_sentinel(n, alpha, rho)) > 1e-7) {
    throw BracketFailure("sign change is the feasibility edge, not a root");
  }
  return rho;
}

/// Assemble the full parameter set at a given (n, alpha).
inline ChaseParams make_params(int n, double alpha) {
  const double rho = solve_rho(n, alpha);
  const StopChain chain = solve_stop_times(n, alpha, rho);
  ChaseParams p;
  p.n = n;
  p.alpha = alpha;
  p.rho = rho;
  p.gamma = alpha + 0.5 * rho;
  p.tau = chain.tau;
  p.stop_times = chain.stop_times;
  p.start_angles = chain.start_angles;
  p.T_p = 1.0 + alpha + rho;
  p.T = p.T_p + 1.0;
  return p;
}

/// Minimizes T(alpha) = 2 + alpha + rho(alpha). A coarse scan over the
/// search interval brackets the minimum (the interval ends can be entirely
/// infeasible for small n), then golden-section refines it. When
/// `unimodality_warning` is non-null it reports whether the scan saw the
/// interval endpoints dip below the interior minimum.
inline ChaseParams optimize_alpha(int n, bool* unimodality_warning = nullptr,
                                  double alpha_tol = kAlphaTol) {
  if (n < 4) throw UnsupportedN("IntersectChase requires n >= 4");
  auto cost = [&](double a) {
    try {
      return a + solve_rho(n, a);
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  const double center = kAlphaConstant * kPi / n;
  const double lo = 0.25 * center;
  const double hi = 4.0 * center;
  constexpr int kScan = 16;
  int best = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  double endpoint_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kScan; ++i) {
    const double a = lo + (hi - lo) * i / kScan;
    const double c = cost(a);
    if (c < best_cost) {
      best_cost = c;
      best = i;
    }
    if (i == 0 || i == kScan) endpoint_min = std::min(endpoint_min, c);
  }
  if (!std::isfinite(best_cost)) {
    throw BracketFailure("no feasible alpha in the search interval");
  }
  if (unimodality_warning != nullptr) {
    *unimodality_warning = endpoint_min <= best_cost;
  }
  const double a = lo + (hi - lo) * std::max(best - 1, 0) / kScan;
  const double b = lo + (hi - lo) * std::min(best + 1, kScan) / kScan;
  const double alpha = golden_min(cost, a, b, alpha_tol);
  return make_params(n, alpha);
}

/// Expand a solved instance into the symmetric class-S strategy it defines.
inline strategy::StrategyS to_strategy(const ChaseParams& params) {
  strategy::SymSpec spec;
  spec.n = params.n;
  spec.phi_plus = params.start_angles;
  spec.alpha = params.alpha;
  return strategy::expand_sym(spec);
}

}  // namespace evac::chase
