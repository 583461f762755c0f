#pragma once

// Text and JSON renderings of suite reports. Both are deterministic: rows in
// suite order, no timings.

#include <string>
#include <vector>

#include "tortile/bundle_io.hpp"
#include "tortile/suites.hpp"

namespace tortile {

inline std::string report_to_text(const SuiteReport& r) {
  std::string s = "suite " + r.suite + ": " + (r.ok() ? "pass" : "FAIL") + "\n";
  for (const auto& row : r.rows) {
    s += "  " + std::string(row.pass ? "ok   " : "FAIL ") + row.id + " (" + std::to_string(row.checked) + " checked)\n";
    if (row.pass) continue;
    s += "       " + row.witness + "\n";
    if (!row.lhs.empty() || !row.rhs.empty()) s += "       lhs: " + row.lhs + "\n       rhs: " + row.rhs + "\n";
  }
  return s;
}

inline json report_to_json(const SuiteReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j{{"id", row.id}, {"description", row.description}, {"pass", row.pass}, {"checked", row.checked}};
    if (!row.pass) {
      j["witness"] = row.witness;
      j["lhs"] = row.lhs;
      j["rhs"] = row.rhs;
    }
    rows.push_back(std::move(j));
  }
  return json{{"suite", r.suite}, {"pass", r.ok()}, {"rows", std::move(rows)}};
}

inline std::string reports_to_text(const std::vector<SuiteReport>& rs) {
  std::string s;
  for (const auto& r : rs) s += report_to_text(r);
  return s;
}

inline std::string reports_to_json(const std::vector<SuiteReport>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace tortile
