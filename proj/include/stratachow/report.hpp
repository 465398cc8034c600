#pragma once
// Scenario reports: pass/fail per step with witness polynomials and
// smoothness annotations, rendered as stable text or JSON.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stratachow/parse.hpp"
#include "stratachow/poly.hpp"

namespace stratachow {

struct Step {
  std::string name;
  bool pass = false;
  std::string detail;                   // short human-readable note
  std::optional<Polynomial> witness;    // nonzero defect for failing steps
  std::optional<bool> smooth;           // certificate denominators 2,3-smooth
};

struct ScenarioReport {
  std::string name;
  bool pass = true;  // conjunction of the step outcomes
  std::vector<Step> steps;
  long timing_ms = 0;
  std::string smoothness;  // summary annotation for the whole scenario

  void add(Step s) {
    pass = pass && s.pass;
    steps.push_back(std::move(s));
  }
};

namespace reportdetail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace reportdetail

// Deterministic text rendering: timing is intentionally omitted so repeated
// runs produce byte-identical output.
inline std::string render_text(const ScenarioReport& r) {
  std::ostringstream out;
  out << "scenario " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& s : r.steps) {
    out << "  [" << (s.pass ? "ok" : "FAIL") << "] " << s.name;
    if (!s.detail.empty()) out << " — " << s.detail;
    if (s.smooth) out << " (certificate " << (*s.smooth ? "" : "NOT ") << "smooth over Z[1/6])";
    out << "\n";
    if (s.witness && !s.witness->is_zero())
      out << "        witness: " << print_canonical(*s.witness) << "\n";
  }
  if (!r.smoothness.empty()) out << "  smoothness: " << r.smoothness << "\n";
  return out.str();
}

inline std::string render_json(const ScenarioReport& r) {
  using reportdetail::json_escape;
  std::ostringstream out;
  out << "{\"name\":\"" << json_escape(r.name) << "\",\"pass\":" << (r.pass ? "true" : "false")
      << ",\"steps\":[";
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& s = r.steps[i];
    if (i) out << ",";
    out << "{\"name\":\"" << json_escape(s.name) << "\",\"pass\":" << (s.pass ? "true" : "false");
    if (!s.detail.empty()) out << ",\"detail\":\"" << json_escape(s.detail) << "\"";
    if (s.witness && !s.witness->is_zero())
      out << ",\"witness\":\"" << json_escape(print_canonical(*s.witness)) << "\"";
    if (s.smooth) out << ",\"smooth\":" << (*s.smooth ? "true" : "false");
    out << "}";
  }
  out << "],\"timing_ms\":" << r.timing_ms << ",\"smoothness\":\"" << json_escape(r.smoothness)
      << "\"}";
  return out.str();
}

}  // namespace stratachow
