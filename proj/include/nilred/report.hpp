#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace nilred {

enum class CheckStatus { pass, fail, timeout, inconclusive };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::timeout: return "timeout";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

/// One check outcome. Failures always carry a concrete witness; passes carry
/// a short certificate summary.
struct Report {
  std::string check;
  nlohmann::ordered_json params;  // insertion order is the emission order
  std::string field;
  CheckStatus status = CheckStatus::pass;
  std::string witness;
  long long elapsed_ms = 0;
  uint64_t seed = 0;
};

inline nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["params"] = r.params.is_null() ? nlohmann::ordered_json::object() : r.params;
  j["field"] = r.field;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness;
  j["elapsed_ms"] = r.elapsed_ms;
  j["seed"] = r.seed;
  return j;
}

inline std::string reports_to_json_text(const std::vector<Report>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (auto& r : rs) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

inline void emit_reports(const std::vector<Report>& rs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_reports: cannot open '" + path + "'");
  out << reports_to_json_text(rs);
  if (!out) throw std::runtime_error("emit_reports: write failed for '" + path + "'");
}

inline bool any_failed(const std::vector<Report>& rs) {
  for (auto& r : rs)
    if (r.status == CheckStatus::fail) return true;
  return false;
}

/// "check(param=..., ...) [field]: status (witness) elapsed"
inline std::string report_line(const Report& r) {
  std::string p;
  for (auto it = r.params.begin(); it != r.params.end(); ++it) {
    if (!p.empty()) p += ", ";
    p += it.key() + "=" + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
  }
  std::string s = r.check + "(" + p + ")";
  if (!r.field.empty()) s += " [" + r.field + "]";
  s += ": " + to_string(r.status);
  if (!r.witness.empty()) s += " -- " + r.witness;
  s += " (" + std::to_string(r.elapsed_ms) + " ms)";
  return s;
}

}  // namespace nilred
