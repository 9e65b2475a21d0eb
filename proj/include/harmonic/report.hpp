#pragma once

// Report types shared by the sweep drivers, plus deterministic writers.
// JSON is emitted with fixed field order (ordered_json) and floats printed
// via %.17g so identical configs produce byte-identical files.

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace harmonic::report {

enum class Target { In, Cn, Vn, Gn, AltSums, MainGest, RegimeC, TrajectorySup };

inline const char* target_name(Target t) {
  switch (t) {
    case Target::In: return "I_n";
    case Target::Cn: return "C_n";
    case Target::Vn: return "V_n";
    case Target::Gn: return "G_n";
    case Target::AltSums: return "alt_sums";
    case Target::MainGest: return "main_gest";
    case Target::RegimeC: return "regime_c";
    case Target::TrajectorySup: return "trajectory_sup";
  }
  return "?";
}

enum class SweepVerdict { PASS, FAIL, INFORMATIONAL };

inline const char* verdict_name(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::PASS: return "PASS";
    case SweepVerdict::FAIL: return "FAIL";
    case SweepVerdict::INFORMATIONAL: return "INFORMATIONAL";
  }
  return "?";
}

struct GridPoint {
  double a = 0.0;  // n, or T for trajectory sweeps
  double b = 0.0;  // t, gamma, or epsilon
};

struct BoundSweepReport {
  Target target = Target::In;
  std::string quantity;  // human name of the evaluated integral/sup
  std::vector<GridPoint> grid;
  std::vector<double> values;
  double empirical_sup = 0.0;
  GridPoint argmax;
  std::optional<double> bound_formula;
  SweepVerdict verdict = SweepVerdict::INFORMATIONAL;

  // empirical_sup/argmax are the exact max over `values` (serial scan, so
  // the result does not depend on evaluation order).
  void finalize() {
    if (values.size() != grid.size())
      throw std::logic_error("BoundSweepReport: grid/value size mismatch");
    empirical_sup = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!(std::abs(values[i]) <= 1e300))
        throw std::runtime_error("BoundSweepReport: non-finite sweep value");
      if (std::abs(values[i]) > empirical_sup || i == 0) {
        empirical_sup = std::abs(values[i]);
        argmax = grid[i];
      }
    }
    if (bound_formula)
      verdict = empirical_sup <= *bound_formula ? SweepVerdict::PASS : SweepVerdict::FAIL;
  }
};

// ---- deterministic JSON text ----

inline std::string format_double(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  // bare integers still need to read back as doubles
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

namespace detail {

inline void dump(const nlohmann::ordered_json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad_in;
        out += nlohmann::ordered_json(it.key()).dump();
        out += ": ";
        dump(it.value(), out, indent, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "}";
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad_in;
        dump(j[i], out, indent, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "]";
      return;
    }
    case nlohmann::ordered_json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace detail

inline std::string dump_json(const nlohmann::ordered_json& j, int indent = 2) {
  std::string out;
  detail::dump(j, out, indent, 0);
  out += "\n";
  return out;
}

inline nlohmann::ordered_json to_json(const BoundSweepReport& r) {
  nlohmann::ordered_json j;
  j["target"] = target_name(r.target);
  j["quantity"] = r.quantity;
  j["points"] = r.grid.size();
  j["empirical_sup"] = r.empirical_sup;
  j["argmax"] = {{"a", r.argmax.a}, {"b", r.argmax.b}};
  if (r.bound_formula)
    j["bound_formula"] = *r.bound_formula;
  else
    j["bound_formula"] = nullptr;
  j["verdict"] = verdict_name(r.verdict);
  return j;
}

inline std::string to_csv(const BoundSweepReport& r) {
  std::string out = "a,b,value\n";
  char buf[128];
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", r.grid[i].a, r.grid[i].b,
                  r.values[i]);
    out += buf;
  }
  return out;
}

}  // namespace harmonic::report
