#pragma once

// Bounded two-sided lattice sequences q : Z -> R and the discrete Laplacian.
//
// Everything is in displacement coordinates q_k; equilibrium offsets are
// never materialized. The canonical initial conditions ship as closed-form
// rules evaluated on a finite window [-K, K]; momenta are always zero.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace harmonic::lattice {

enum class Rule : std::uint8_t {
  Sign,         // sign(k), sign(0) = 0
  Spike,        // 1 everywhere except value b at k = 0
  Alternating,  // (-1)^k
  LogDecay,     // sin(ln ln|k|)/ln^2|k| for |k| > 1, else 0
  Constant,     // c for all k
  Sampled,      // q_k = f(k) for a C^2 function f
  Custom,       // finite table, 0 outside
};

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Sign: return "sign";
    case Rule::Spike: return "spike";
    case Rule::Alternating: return "alternating";
    case Rule::LogDecay: return "logdecay";
    case Rule::Constant: return "constant";
    case Rule::Sampled: return "sampled";
    case Rule::Custom: return "custom";
  }
  return "?";
}

struct InitialCondition {
  Rule rule = Rule::Sign;
  double param = 0.0;                      // Spike b / Constant c
  std::function<double(double)> fn;        // Sampled
  std::string fn_name;                     // Sampled, registry key for round trips
  std::map<long, double> table;            // Custom
  long window = 64;                        // evaluation half-width K

  static InitialCondition sign(long K = 64) { return {Rule::Sign, 0.0, {}, {}, {}, K}; }
  static InitialCondition spike(double b, long K = 64) { return {Rule::Spike, b, {}, {}, {}, K}; }
  static InitialCondition alternating(long K = 64) { return {Rule::Alternating, 0.0, {}, {}, {}, K}; }
  static InitialCondition log_decay(long K = 2048) { return {Rule::LogDecay, 0.0, {}, {}, {}, K}; }
  static InitialCondition constant(double c, long K = 64) { return {Rule::Constant, c, {}, {}, {}, K}; }
  static InitialCondition sampled(std::function<double(double)> f, std::string name = "",
                                  long K = 256) {
    return {Rule::Sampled, 0.0, std::move(f), std::move(name), {}, K};
  }
  static InitialCondition custom(std::map<long, double> t, long K = 64) {
    return {Rule::Custom, 0.0, {}, {}, std::move(t), K};
  }
};

inline double evaluate_ic(const InitialCondition& ic, long k) {
  switch (ic.rule) {
    case Rule::Sign:
      return k > 0 ? 1.0 : (k < 0 ? -1.0 : 0.0);
    case Rule::Spike:
      return k == 0 ? ic.param : 1.0;
    case Rule::Alternating:
      return (k & 1L) ? -1.0 : 1.0;
    case Rule::LogDecay: {
      const long a = std::labs(k);
      if (a <= 1) return 0.0;
      const double lg = std::log(static_cast<double>(a));
      return std::sin(std::log(lg)) / (lg * lg);
    }
    case Rule::Constant:
      return ic.param;
    case Rule::Sampled:
      if (!ic.fn) throw std::invalid_argument("sampled rule without function");
      return ic.fn(static_cast<double>(k));
    case Rule::Custom: {
      auto it = ic.table.find(k);
      return it == ic.table.end() ? 0.0 : it->second;
    }
  }
  throw std::logic_error("unknown rule");
}

// Finite window of a two-sided sequence: values[i] sits at index offset + i.
struct LatticeSlice {
  long offset = 0;
  std::vector<double> values;

  long lo() const { return offset; }
  long hi() const { return offset + static_cast<long>(values.size()) - 1; }
  std::size_t size() const { return values.size(); }

  double at(long k) const {
    if (k < lo() || k > hi()) throw std::out_of_range("LatticeSlice::at");
    return values[static_cast<std::size_t>(k - offset)];
  }
  // 0 outside the window; handy for window-relative sums.
  double get(long k) const {
    return (k < lo() || k > hi()) ? 0.0 : values[static_cast<std::size_t>(k - offset)];
  }
};

inline LatticeSlice sample(const InitialCondition& ic, long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("sample: empty window");
  LatticeSlice s;
  s.offset = lo;
  s.values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long k = lo; k <= hi; ++k) s.values.push_back(evaluate_ic(ic, k));
  return s;
}

inline LatticeSlice sample(const InitialCondition& ic) {
  return sample(ic, -ic.window, ic.window);
}

// q^Delta = -Delta q, q^Delta_k = 2 q_k - q_{k+1} - q_{k-1}, on the interior.
inline LatticeSlice discrete_laplacian(const LatticeSlice& q) {
  if (q.size() < 3)
    throw std::invalid_argument("discrete_laplacian: window must hold >= 3 entries");
  LatticeSlice out;
  out.offset = q.offset + 1;
  out.values.resize(q.size() - 2);
  for (std::size_t i = 0; i + 2 < q.size(); ++i)
    out.values[i] = 2.0 * q.values[i + 1] - q.values[i + 2] - q.values[i];
  return out;
}

// delta_k = q_k - q_{k-1}; one entry shorter, anchored at offset+1.
inline LatticeSlice first_difference(const LatticeSlice& q) {
  if (q.size() < 2)
    throw std::invalid_argument("first_difference: window must hold >= 2 entries");
  LatticeSlice out;
  out.offset = q.offset + 1;
  out.values.resize(q.size() - 1);
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    out.values[i] = q.values[i + 1] - q.values[i];
  return out;
}

// ---- JSON round trip: {rule, params, window} ----

double sampled_registry(const std::string& name, double x);

inline nlohmann::ordered_json to_json(const InitialCondition& ic) {
  nlohmann::ordered_json j;
  j["rule"] = rule_name(ic.rule);
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  if (ic.rule == Rule::Spike) params["b"] = ic.param;
  if (ic.rule == Rule::Constant) params["c"] = ic.param;
  if (ic.rule == Rule::Sampled) {
    if (ic.fn_name.empty())
      throw std::invalid_argument("sampled rule with unnamed function is not serializable");
    params["name"] = ic.fn_name;
  }
  if (ic.rule == Rule::Custom) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [k, v] : ic.table) t[std::to_string(k)] = v;
    params["table"] = std::move(t);
  }
  j["params"] = std::move(params);
  j["window"] = ic.window;
  return j;
}

inline InitialCondition ic_from_json(const nlohmann::json& j) {
  const std::string rule = j.at("rule").get<std::string>();
  const nlohmann::json params =
      j.contains("params") ? j["params"] : nlohmann::json::object();
  long window = j.contains("window") ? j["window"].get<long>() : 64;
  if (window < 2) throw std::invalid_argument("ic_from_json: window must be >= 2");
  if (rule == "sign") return InitialCondition::sign(window);
  if (rule == "alternating") return InitialCondition::alternating(window);
  if (rule == "logdecay")
    return InitialCondition::log_decay(j.contains("window") ? window : 2048);
  if (rule == "spike") {
    const double b = params.contains("b") ? params["b"].get<double>() : 0.0;
    return InitialCondition::spike(b, window);
  }
  if (rule == "constant") {
    const double c = params.contains("c") ? params["c"].get<double>() : 0.0;
    return InitialCondition::constant(c, window);
  }
  if (rule == "sampled") {
    const std::string name = params.at("name").get<std::string>();
    auto fn = [name](double x) { return sampled_registry(name, x); };
    return InitialCondition::sampled(fn, name, window);
  }
  if (rule == "custom") {
    std::map<long, double> t;
    // the table may sit under params or at the top level
    const nlohmann::json* tbl = nullptr;
    if (params.contains("table")) tbl = &params["table"];
    else if (j.contains("table")) tbl = &j["table"];
    if (tbl)
      for (auto it = tbl->begin(); it != tbl->end(); ++it)
        t[std::stol(it.key())] = it.value().get<double>();
    return InitialCondition::custom(std::move(t), window);
  }
  throw std::invalid_argument("ic_from_json: unknown rule '" + rule + "'");
}

// Named C^2 test functions available to the sampled rule from config files.
inline double sampled_registry(const std::string& name, double x) {
  if (name == "gaussian") return std::exp(-x * x);
  if (name == "sech") return 1.0 / std::cosh(x);
  if (name == "sin") return std::sin(x);
  if (name == "atan") return std::atan(x);
  if (name == "sinroot") return std::sin(std::pow(1.0 + x * x, 0.25));
  throw std::invalid_argument("unknown sampled function '" + name + "'");
}

// "sign", "spike:3", "constant:2", "logdecay", or inline JSON.
inline InitialCondition parse_ic_spec(const std::string& spec) {
  if (!spec.empty() && (spec.front() == '{' || spec.front() == '['))
    return ic_from_json(nlohmann::json::parse(spec));
  std::string name = spec;
  std::string arg;
  if (auto pos = spec.find(':'); pos != std::string::npos) {
    name = spec.substr(0, pos);
    arg = spec.substr(pos + 1);
  }
  if (name == "sign") return InitialCondition::sign();
  if (name == "alternating") return InitialCondition::alternating();
  if (name == "logdecay") return InitialCondition::log_decay();
  if (name == "spike") return InitialCondition::spike(arg.empty() ? 2.0 : std::stod(arg));
  if (name == "constant")
    return InitialCondition::constant(arg.empty() ? 1.0 : std::stod(arg));
  if (name == "sampled" && !arg.empty())
    return InitialCondition::sampled([arg](double x) { return sampled_registry(arg, x); }, arg);
  throw std::invalid_argument("unknown initial-condition spec '" + spec + "'");
}

}  // namespace harmonic::lattice
