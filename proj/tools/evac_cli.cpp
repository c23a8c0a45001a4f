// Command-line front end: solve IntersectChase instances, evaluate class-S
// strategies against the adversary, and emit the bounds table, evacuation
// profiles, and animation traces.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evac/evac.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

struct OutputTarget {
  std::string path;  // empty = stdout

  int write(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      return 0;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot open output file '" << path << "'\n";
      return kExitFailure;
    }
    os << content;
    return 0;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw evac::Error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

evac::chase::ChaseParams solve_instance(int n, std::optional<double> alpha,
                                        double tol) {
  if (alpha.has_value()) {
    return evac::chase::make_params(n, *alpha);
  }
  return evac::chase::optimize_alpha(n, nullptr, std::max(tol, 1e-14));
}

int cmd_solve(int n, std::optional<double> alpha, double tol,
              const OutputTarget& out) {
  const auto params = solve_instance(n, alpha, tol);
  return out.write(evac::io::params_to_json(params));
}

int cmd_evaluate(const std::string& strategy_path, int samples,
                 const OutputTarget& out) {
  const auto s = evac::io::strategy_from_json(read_file(strategy_path));
  const auto violations = evac::strategy::validate(s);
  if (!violations.empty()) {
    std::cerr << "error: strategy fails validation:";
    for (const auto& v : violations) std::cerr << " " << v;
    std::cerr << "\n";
    return kExitFailure;
  }
  const auto tl = evac::evaluator::coverage_timeline(s);
  const auto [covered, finish] = evac::evaluator::verify_full_coverage(tl);
  std::ostringstream os;
  if (!covered) {
    os << "{\n  \"covered\": false\n}\n";
    return out.write(os.str());
  }
  const auto profile = evac::evaluator::worst_case(s, samples);
  os << "{\n  \"worst_theta\": " << evac::io::format_number(profile.worst_theta)
     << ",\n  \"worst_evac\": " << evac::io::format_number(profile.worst_evac)
     << ",\n  \"finish_time\": " << evac::io::format_number(*finish)
     << ",\n  \"covered\": true\n}\n";
  return out.write(os.str());
}

int cmd_table(int n_min, int n_max, double tol, const OutputTarget& out) {
  std::ostringstream os;
  evac::io::write_bounds_header(os);
  for (int n = n_min; n <= n_max; ++n) {
    auto row = evac::bounds::make_row(n);
    row.T_alg = evac::chase::optimize_alpha(n, nullptr, std::max(tol, 1e-14)).T;
    evac::io::write_bounds_row(os, row);
  }
  return out.write(os.str());
}

int cmd_profile(int n, const std::string& strategy_path, int samples,
                double tol, const OutputTarget& out) {
  evac::strategy::StrategyS s;
  if (!strategy_path.empty()) {
    s = evac::io::strategy_from_json(read_file(strategy_path));
  } else {
    s = evac::chase::to_strategy(evac::chase::optimize_alpha(n, nullptr, std::max(tol, 1e-14)));
  }
  const auto profile = evac::evaluator::worst_case(s, samples);
  std::ostringstream os;
  evac::io::write_profile_csv(os, profile);
  return out.write(os.str());
}

int cmd_bounds(int n_min, int n_max, bool dense, const OutputTarget& out) {
  std::ostringstream os;
  evac::io::write_bounds_header(os);
  if (dense) {
    // Geometric grid, eight points per octave, closed forms evaluated at
    // real n.
    const double ratio = std::pow(2.0, 1.0 / 8.0);
    for (double x = n_min; x < n_max * ratio; x *= ratio) {
      const double n = std::min(x, static_cast<double>(n_max));
      os << evac::io::format_number(n) << ",,"
         << evac::io::format_number(evac::bounds::detail::ub_value(n)) << ","
         << evac::io::format_number(evac::bounds::detail::lb_value(n)) << ","
         << evac::io::format_number(evac::bounds::detail::naive_ub_value(n))
         << ","
         << evac::io::format_number(evac::bounds::detail::naive_lb_value(n))
         << "\n";
      if (n >= n_max) break;
    }
  } else {
    for (int n = n_min; n <= n_max; ++n) {
      evac::io::write_bounds_row(os, evac::bounds::make_row(n));
    }
  }
  return out.write(os.str());
}

int cmd_trace(int n, std::optional<double> alpha, double dt, double tol,
              const OutputTarget& out) {
  const auto params = solve_instance(n, alpha, tol);
  const auto s = evac::chase::to_strategy(params);
  const auto tl = evac::evaluator::coverage_timeline(s);
  const auto [covered, finish] = evac::evaluator::verify_full_coverage(tl);
  if (!covered || !finish.has_value()) {
    std::cerr << "error: solved strategy does not cover the circle\n";
    return kExitFailure;
  }
  const double t_end = *finish;
  const double win_lo = 1.0 + params.gamma;
  const double win_hi = 1.0 + params.alpha + 0.5 * (params.rho + 2.0);

  std::ostringstream os;
  os << "[\n";
  bool first_frame = true;
  for (double t = 0.0; t <= t_end + 0.5 * dt; t += dt) {
    if (!first_frame) os << ",\n";
    first_frame = false;
    os << "{\"t\": " << evac::io::format_number(t);
    const auto q = s.queen.at(t);
    os << ", \"queen\": [" << evac::io::format_number(q.x) << ","
       << evac::io::format_number(q.y) << "], \"servants\": [";
    evac::geometry::ArcSet seen;
    for (std::size_t k = 0; k < tl.segments.size(); ++k) {
      const auto& seg = tl.segments[k];
      evac::geometry::PlanarPoint p;
      if (t < 1.0) {
        p = {t * std::cos(seg.phi), t * std::sin(seg.phi)};
      } else {
        const double travelled = std::min(t - 1.0, seg.length);
        const double a = seg.phi + seg.sigma * travelled;
        p = {std::cos(a), std::sin(a)};
        if (travelled > 0.0) {
          const double start = seg.sigma > 0 ? seg.phi : seg.phi - travelled;
          seen.insert({evac::geometry::normalize_angle(start), travelled});
        }
      }
      if (k) os << ",";
      os << "[" << evac::io::format_number(p.x) << ","
         << evac::io::format_number(p.y) << "]";
    }
    os << "], \"intercepts\": ";
    if (t >= win_lo && t <= win_hi) {
      const auto a = evac::chase::intercept_position(params.alpha, params.rho,
                                                     t - 1.0);
      os << "[[" << evac::io::format_number(a.x) << ","
         << evac::io::format_number(a.y) << "],["
         << evac::io::format_number(a.x) << ","
         << evac::io::format_number(-a.y) << "]]";
    } else {
      os << "null";
    }
    os << ", \"covered\": [";
    bool first_arc = true;
    for (const auto& arc : seen.arcs()) {
      if (!first_arc) os << ",";
      first_arc = false;
      os << "[" << evac::io::format_number(arc.start) << ","
         << evac::io::format_number(arc.start + arc.length) << "]";
    }
    os << "]}";
  }
  os << "\n]\n";
  return out.write(os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Priority evacuation from a disk: IntersectChase solver, "
               "adversarial evaluator, and bounds tables"};
  app.require_subcommand(1);

  int n = 4;
  int n_min = 4, n_max = 8;
  int samples = 4096;
  double tol = 1e-9;
  double dt = 0.01;
  std::optional<double> alpha_override;
  std::string out_path;
  std::string strategy_path;
  bool dense = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Output file (default: stdout)");
    cmd->add_option("--tol", tol, "Solver tolerance")
        ->check(CLI::Range(1e-14, 1e-3));
  };

  auto* solve = app.add_subcommand("solve", "Solve IntersectChase(n)");
  solve->add_option("--n", n, "Number of servants (>= 4)")->required();
  solve->add_option("--alpha", alpha_override,
                    "Fix the queen delay instead of optimizing");
  add_common(solve);

  auto* evaluate =
      app.add_subcommand("evaluate", "Evaluate a strategy JSON file");
  evaluate->add_option("--strategy", strategy_path, "Strategy JSON file")
      ->required();
  evaluate->add_option("--samples", samples, "Profile sample count")
      ->check(CLI::Range(16, 1 << 26));
  add_common(evaluate);

  auto* table =
      app.add_subcommand("table", "Solved evacuation times with bounds");
  table->add_option("--n-min", n_min, "Smallest n")->required();
  table->add_option("--n-max", n_max, "Largest n")->required();
  add_common(table);

  auto* profile =
      app.add_subcommand("profile", "Exit-angle evacuation-time profile");
  profile->add_option("--n", n, "Solve IntersectChase(n) and profile it");
  profile->add_option("--strategy", strategy_path,
                      "Profile a strategy file instead");
  profile->add_option("--samples", samples, "Profile sample count")
      ->check(CLI::Range(16, 1 << 26));
  add_common(profile);

  auto* trace = app.add_subcommand("trace", "Animation frame data");
  trace->add_option("--n", n, "Number of servants (>= 4)")->required();
  trace->add_option("--alpha", alpha_override,
                    "Fix the queen delay instead of optimizing");
  trace->add_option("--dt", dt, "Frame step")->check(CLI::PositiveNumber);
  add_common(trace);

  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bound columns");
  bounds_cmd->add_option("--n-min", n_min, "Smallest n")->required();
  bounds_cmd->add_option("--n-max", n_max, "Largest n")->required();
  bounds_cmd->add_flag("--dense", dense,
                       "Geometric real-n grid for plotting");
  add_common(bounds_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const OutputTarget out{out_path};
  try {
    if (solve->parsed()) {
      if (n < 4) {
        std::cerr << "error: n must be >= 4\n";
        return kExitUsage;
      }
      return cmd_solve(n, alpha_override, tol, out);
    }
    if (evaluate->parsed()) {
      return cmd_evaluate(strategy_path, samples, out);
    }
    if (table->parsed()) {
      if (n_min < 4 || n_min > n_max) {
        std::cerr << "error: need 4 <= n-min <= n-max\n";
        return kExitUsage;
      }
      return cmd_table(n_min, n_max, tol, out);
    }
    if (profile->parsed()) {
      if (strategy_path.empty() && n < 4) {
        std::cerr << "error: n must be >= 4 (or provide --strategy)\n";
        return kExitUsage;
      }
      return cmd_profile(n, strategy_path, samples, tol, out);
    }
    if (trace->parsed()) {
      if (n < 4) {
        std::cerr << "error: n must be >= 4\n";
        return kExitUsage;
      }
      return cmd_trace(n, alpha_override, dt, tol, out);
    }
    if (bounds_cmd->parsed()) {
      if (n_min < 4 || n_min > n_max) {
        std::cerr << "error: need 4 <= n-min <= n-max\n";
        return kExitUsage;
      }
      return cmd_bounds(n_min, n_max, dense, out);
    }
  } catch (const evac::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
