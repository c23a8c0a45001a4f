#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "evac/bounds.hpp"
#include "evac/chase.hpp"
#include "evac/errors.hpp"
#include "evac/evaluator.hpp"
#include "evac/strategy.hpp"

namespace evac::io {

struct ParseError : Error {
  using Error::Error;
};

/// Fixed 12-significant-digit formatting; lowercase scientific outside
/// [1e-4, 1e6). Keeps data files byte-reproducible.
inline std::string format_number(double x) {
  if (x == 0.0) return "0";
  if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
  char buf[48];
  const double ax = std::fabs(x);
  if (ax < 1e-4 || ax >= 1e6) {
    std::snprintf(buf, sizeof buf, "%.11e", x);
  } else {
    const int digits_before = static_cast<int>(std::floor(std::log10(ax))) + 1;
    std::snprintf(buf, sizeof buf, "%.*f", 12 - digits_before, x);
  }
  return buf;
}

inline std::string json_array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_number(v[i]);
  }
  return out + "]";
}

inline std::string params_to_json(const chase::ChaseParams& p) {
  std::ostringstream os;
  os << "{\n"
     << "  \"n\": " << p.n << ",\n"
     << "  \"time_convention\": \"perimeter\",\n"
     << "  \"alpha\": " << format_number(p.alpha) << ",\n"
     << "  \"rho\": " << format_number(p.rho) << ",\n"
     << "  \"gamma\": " << format_number(p.gamma) << ",\n"
     << "  \"tau\": " << format_number(p.tau) << ",\n"
     << "  \"stop_times\": " << json_array(p.stop_times) << ",\n"
     << "  \"start_angles\": " << json_array(p.start_angles) << ",\n"
     << "  \"T_p\": " << format_number(p.T_p) << ",\n"
     << "  \"T\": " << format_number(p.T) << "\n"
     << "}\n";
  return os.str();
}

inline std::string strategy_to_json(const strategy::StrategyS& s) {
  std::ostringstream os;
  os << "{\n  \"n\": " << s.n << ",\n";
  if (s.alpha.has_value()) {
    os << "  \"alpha\": " << format_number(*s.alpha) << ",\n";
  } else {
    os << "  \"alpha\": null,\n  \"queen\": [";
    const auto& w = s.queen.waypoints();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ",";
      os << "[" << format_number(w[i].t) << "," << format_number(w[i].p.x)
         << "," << format_number(w[i].p.y) << "]";
    }
    os << "],\n";
  }
  os << "  \"servants\": [";
  for (std::size_t i = 0; i < s.servants.size(); ++i) {
    if (i) os << ",";
    os << "{\"phi\": " << format_number(s.servants[i].phi)
       << ", \"sigma\": " << s.servants[i].sigma << "}";
  }
  os << "]\n}\n";
  return os.str();
}

inline strategy::StrategyS strategy_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("strategy JSON: ") + e.what());
  }
  strategy::StrategyS s;
  try {
    // Solver output round trip: a ChaseParams document expands to the
    // symmetric strategy it defines.
    if (!j.contains("servants") && j.contains("start_angles")) {
      strategy::SymSpec spec;
      spec.n = j.at("n").get<int>();
      spec.alpha = j.at("alpha").get<double>();
      for (const auto& v : j.at("start_angles")) {
        spec.phi_plus.push_back(v.get<double>());
      }
      return strategy::expand_sym(spec);
    }
    s.n = j.at("n").get<int>();
    if (j.contains("alpha") && !j["alpha"].is_null()) {
      s.alpha = j["alpha"].get<double>();
      s.queen = strategy::queen_path(*s.alpha);
    } else if (j.contains("queen")) {
      std::vector<strategy::PiecewisePath::Waypoint> w;
      for (const auto& row : j.at("queen")) {
        w.push_back({row.at(0).get<double>(),
                     {row.at(1).get<double>(), row.at(2).get<double>()}});
      }
      s.queen = strategy::PiecewisePath(std::move(w));
    } else {
      s.queen = strategy::PiecewisePath();  // queen parked at the origin
    }
    for (const auto& sv : j.at("servants")) {
      s.servants.push_back(
          {sv.at("phi").get<double>(), sv.at("sigma").get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("strategy JSON: ") + e.what());
  }
  return s;
}

/// Profile CSV: one row per sample plus worst-case comment trailer.
inline void write_profile_csv(std::ostream& os,
                              const evaluator::EvacProfile& profile) {
  os << "theta,discovery_time,evac_time\n";
  for (const auto& s : profile.samples) {
    os << format_number(s.theta) << "," << format_number(s.discovery) << ","
       << format_number(s.evac) << "\n";
  }
  os << "# worst_theta=" << format_number(profile.worst_theta) << "\n";
  os << "# worst_evac=" << format_number(profile.worst_evac) << "\n";
}

inline void write_bounds_header(std::ostream& os) {
  os << "n,T,ub,lb,naive_ub,naive_lb\n";
}

inline void write_bounds_row(std::ostream& os, const bounds::BoundsRow& row) {
  os << row.n << ","
     << (row.T_alg ? format_number(*row.T_alg) : std::string()) << ","
     << format_number(row.ub) << "," << format_number(row.lb) << ","
     << format_number(row.naive_ub) << "," << format_number(row.naive_lb)
     << "\n";
}

}  // namespace evac::io
