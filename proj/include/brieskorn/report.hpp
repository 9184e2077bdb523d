#pragma once

// Machine-readable reports: one row per claim, pairing the symbolic value
// with its numeric estimate.

#include "brieskorn/numeric/fit.hpp"
#include "brieskorn/rational.hpp"

#include "json.hpp"

#include <chrono>
#include <ctime>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef BRIESKORN_VERSION
#define BRIESKORN_VERSION "0.0.0"
#endif

namespace brieskorn {

using Json = nlohmann::json;

struct VerdictRow {
  std::string claim;
  std::string tag;  // stable theorem tag, e.g. "tgcsup", "l17"
  Json symbolic;    // null when absent
  Json numeric;     // null when absent
  std::optional<double> tolerance;
  std::optional<bool> pass;  // only when both symbolic and numeric are present

  friend bool operator==(const VerdictRow&, const VerdictRow&) = default;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<VerdictRow> verdicts;
  std::uint64_t seed = 0;
  std::string version = BRIESKORN_VERSION;
  std::string timestamp;
  Json details = Json::object();

  /// Appends a row; `pass` is dropped unless both values are present, and
  /// required when they are.
  VerdictRow& add(std::string claim, std::string tag, Json symbolic, Json numeric = nullptr,
                  std::optional<double> tolerance = std::nullopt, std::optional<bool> pass = std::nullopt) {
    VerdictRow row{std::move(claim), std::move(tag), std::move(symbolic), std::move(numeric), tolerance, pass};
    if (row.symbolic.is_null() || row.numeric.is_null()) row.pass.reset();
    else if (!row.pass) throw std::logic_error("verdict row '" + row.claim + "' has both values but no pass flag");
    verdicts.push_back(std::move(row));
    return verdicts.back();
  }

  [[nodiscard]] bool all_pass() const {
    for (const auto& v : verdicts)
      if (v.pass && !*v.pass) return false;
    return true;
  }

  friend bool operator==(const Report&, const Report&) = default;
};

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Json rational_json(const std::optional<Rational>& r) {
  return r ? Json(to_string(*r)) : Json(nullptr);
}

inline Json to_json(const numeric::ExponentFit& f) {
  return Json{{"slope", f.slope},
              {"intercept", f.intercept},
              {"r_squared", f.r_squared},
              {"rational_snap", rational_json(f.rational_snap)}};
}

inline numeric::ExponentFit exponent_fit_from_json(const Json& j) {
  numeric::ExponentFit f;
  f.slope = j.at("slope").get<double>();
  f.intercept = j.at("intercept").get<double>();
  f.r_squared = j.at("r_squared").get<double>();
  if (!j.at("rational_snap").is_null()) f.rational_snap = parse_rational(j.at("rational_snap").get<std::string>());
  f.unstable = f.r_squared < 0.99;
  return f;
}

inline Json to_json(const VerdictRow& v) {
  Json j{{"claim", v.claim}, {"paper_ref", v.tag}, {"symbolic", v.symbolic}, {"numeric", v.numeric}};
  j["tolerance"] = v.tolerance ? Json(*v.tolerance) : Json(nullptr);
  if (v.pass) j["pass"] = *v.pass;
  return j;
}

inline Json to_json(const Report& r) {
  Json rows = Json::array();
  for (const auto& v : r.verdicts) rows.push_back(to_json(v));
  return Json{{"command", r.command}, {"inputs", r.inputs},       {"verdicts", rows},
              {"seed", r.seed},       {"version", r.version},     {"timestamp", r.timestamp},
              {"details", r.details}};
}

inline Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.seed = j.at("seed").get<std::uint64_t>();
  r.version = j.at("version").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.details = j.value("details", Json::object());
  for (const auto& v : j.at("verdicts")) {
    VerdictRow row;
    row.claim = v.at("claim").get<std::string>();
    row.tag = v.at("paper_ref").get<std::string>();
    row.symbolic = v.at("symbolic");
    row.numeric = v.at("numeric");
    if (!v.at("tolerance").is_null()) row.tolerance = v.at("tolerance").get<double>();
    if (v.contains("pass")) row.pass = v.at("pass").get<bool>();
    r.verdicts.push_back(std::move(row));
  }
  return r;
}

inline std::string serialize(const Report& r) { return to_json(r).dump(2) + "\n"; }

/// Structural check of a report document; returns the violations found.
inline std::vector<std::string> validate_report(const Json& j) {
  std::vector<std::string> errors;
  auto need = [&](const Json& obj, const char* key, auto pred, const char* what, const std::string& where) {
    if (!obj.contains(key)) {
      errors.push_back(where + "." + key + " missing");
      return false;
    }
    if (!pred(obj.at(key))) {
      errors.push_back(where + "." + key + " is not " + what);
      return false;
    }
    return true;
  };
  auto is_string = [](const Json& x) { return x.is_string(); };
  if (!j.is_object()) return {"report is not an object"};
  need(j, "command", is_string, "a string", "report");
  need(j, "inputs", [](const Json& x) { return x.is_object(); }, "an object", "report");
  need(j, "seed", [](const Json& x) { return x.is_number_unsigned(); }, "an unsigned integer", "report");
  need(j, "version", is_string, "a string", "report");
  need(j, "timestamp", is_string, "a string", "report");
  if (!need(j, "verdicts", [](const Json& x) { return x.is_array(); }, "an array", "report")) return errors;
  for (std::size_t i = 0; i < j.at("verdicts").size(); ++i) {
    const Json& v = j.at("verdicts")[i];
    const std::string where = "verdicts[" + std::to_string(i) + "]";
    if (!v.is_object()) {
      errors.push_back(where + " is not an object");
      continue;
    }
    need(v, "claim", is_string, "a string", where);
    if (need(v, "paper_ref", is_string, "a string", where) && v.at("paper_ref").get<std::string>().empty())
      errors.push_back(where + ".paper_ref is empty");
    need(v, "symbolic", [](const Json&) { return true; }, "", where);
    need(v, "numeric", [](const Json&) { return true; }, "", where);
    need(v, "tolerance", [](const Json& x) { return x.is_null() || x.is_number(); }, "a number or null", where);
    const bool both = v.contains("symbolic") && v.contains("numeric") && !v.at("symbolic").is_null() &&
                      !v.at("numeric").is_null();
    if (v.contains("pass")) {
      if (!v.at("pass").is_boolean()) errors.push_back(where + ".pass is not a boolean");
      if (!both) errors.push_back(where + ".pass present without both symbolic and numeric values");
    } else if (both) {
      errors.push_back(where + ".pass missing although both values are present");
    }
  }
  return errors;
}

}  // namespace brieskorn
