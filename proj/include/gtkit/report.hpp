#pragma once

// Machine-readable run reports: labeled results (exact rationals as "p/q",
// numeric values with tolerance), pass/fail checks and per-phase timing.

#include "gtkit/boundary.hpp"
#include "gtkit/rational.hpp"

#include "json.hpp"

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace gtkit {

using Json = nlohmann::ordered_json;

struct Numeric {
  double value = 0;
  double tolerance = 0;
  bool operator==(const Numeric&) const = default;
};

/// Exact rational, numeric value, or plain text (e.g. "skipped").
using ResultValue = std::variant<Rat, Numeric, std::string>;

struct Result {
  std::string label;
  ResultValue value;
  bool operator==(const Result&) const = default;
};

inline ResultValue to_result(const MixedValue& v) {
  if (v.is_exact()) return *v.exact;
  return Numeric{v.approx, v.tolerance};
}

struct Check {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
  bool operator==(const Check&) const = default;
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  std::vector<Result> results;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> timing;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::string status() const { return checks.empty() ? "n/a" : passed() ? "pass" : "fail"; }

  void add(std::string label, ResultValue v) { results.push_back({std::move(label), std::move(v)}); }

  bool operator==(const RunReport&) const = default;
};

/// Wall-clock timer appending to a report on stop().
class PhaseTimer {
 public:
  PhaseTimer(RunReport& r, std::string phase) : r_(r), phase_(std::move(phase)), t0_(std::chrono::steady_clock::now()) {}
  double stop() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    if (!done_) r_.timing.emplace_back(phase_, s);
    done_ = true;
    return s;
  }
  ~PhaseTimer() { stop(); }

 private:
  RunReport& r_;
  std::string phase_;
  std::chrono::steady_clock::time_point t0_;
  bool done_ = false;
};

inline Json to_json(const ResultValue& v) {
  if (const auto* r = std::get_if<Rat>(&v)) return {{"mode", "exact"}, {"value", to_string(*r)}};
  if (const auto* n = std::get_if<Numeric>(&v))
    return {{"mode", "numeric"}, {"value", n->value}, {"tolerance", n->tolerance}};
  return {{"mode", "text"}, {"value", std::get<std::string>(v)}};
}

inline ResultValue result_value_from_json(const Json& j) {
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "exact") return parse_rat(j.at("value").get<std::string>());
  if (mode == "numeric") return Numeric{j.at("value").get<double>(), j.at("tolerance").get<double>()};
  if (mode == "text") return j.at("value").get<std::string>();
  throw std::invalid_argument("unknown result mode '" + mode + "'");
}

inline Json to_json(const RunReport& r) {
  Json results = Json::array();
  for (const auto& res : r.results) {
    Json e = to_json(res.value);
    e["label"] = res.label;
    results.push_back(std::move(e));
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.counterexample.empty()) e["counterexample"] = c.counterexample;
    checks.push_back(std::move(e));
  }
  Json timing = Json::object();
  for (const auto& [k, v] : r.timing) timing[k] = v;
  return {{"command", r.command}, {"inputs", r.inputs}, {"results", results},
          {"checks", checks},     {"status", r.status()}, {"timing", timing}};
}

inline RunReport report_from_json(const Json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  for (const auto& e : j.at("results")) r.results.push_back({e.at("label").get<std::string>(), result_value_from_json(e)});
  for (const auto& e : j.at("checks"))
    r.checks.push_back({e.at("name").get<std::string>(), e.at("passed").get<bool>(), e.at("cases").get<std::size_t>(),
                        e.value("counterexample", std::string())});
  for (const auto& [k, v] : j.at("timing").items()) r.timing.emplace_back(k, v.get<double>());
  return r;
}

/// Flattened table: one line per result and per check.
inline std::string to_csv(const RunReport& r) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream os;
  os << "kind,label,mode,value,tolerance\n";
  for (const auto& res : r.results) {
    os << "result," << quote(res.label) << ',';
    if (const auto* v = std::get_if<Rat>(&res.value)) {
      os << "exact," << to_string(*v) << ",\n";
    } else if (const auto* n = std::get_if<Numeric>(&res.value)) {
      std::ostringstream num;
      num.precision(17);
      num << n->value << ',' << n->tolerance;
      os << "numeric," << num.str() << '\n';
    } else {
      os << "text," << quote(std::get<std::string>(res.value)) << ",\n";
    }
  }
  for (const auto& c : r.checks)
    os << "check," << quote(c.name) << ',' << (c.passed ? "pass" : "fail") << ',' << c.cases << ','
       << quote(c.counterexample) << '\n';
  os << "status,," << r.status() << ",,\n";
  return os.str();
}

inline Json rat_list_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline std::vector<Rat> rat_list_from_json(const Json& j) {
  std::vector<Rat> v;
  for (const auto& e : j) v.push_back(parse_rat(e.get<std::string>()));
  return v;
}

inline Json to_json(const OmegaPoint& w) {
  return {{"alpha_plus", rat_list_json(w.alpha_plus)},   {"beta_plus", rat_list_json(w.beta_plus)},
          {"alpha_minus", rat_list_json(w.alpha_minus)}, {"beta_minus", rat_list_json(w.beta_minus)},
          {"gamma_plus", to_string(w.gamma_plus)},       {"gamma_minus", to_string(w.gamma_minus)}};
}

inline OmegaPoint omega_from_json(const Json& j) {
  OmegaPoint w;
  w.alpha_plus = rat_list_from_json(j.value("alpha_plus", Json::array()));
  w.beta_plus = rat_list_from_json(j.value("beta_plus", Json::array()));
  w.alpha_minus = rat_list_from_json(j.value("alpha_minus", Json::array()));
  w.beta_minus = rat_list_from_json(j.value("beta_minus", Json::array()));
  w.gamma_plus = parse_rat(j.value("gamma_plus", std::string("0")));
  w.gamma_minus = parse_rat(j.value("gamma_minus", std::string("0")));
  w.validate();
  return w;
}

}  // namespace gtkit
