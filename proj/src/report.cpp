#include "report.hpp"

#include <algorithm>

#include <json.hpp>

namespace cli {

Report make_report(std::vector<CheckRecord> checks) {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  Report report;
  report.checks = std::move(checks);
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckRecord& c) { return c.pass; });
  return report;
}

std::string report_json(const Report& report) {
  nlohmann::json j;
  j["version"] = report.version;
  j["pass"] = report.pass;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["family"] = c.family;
    jc["params"] = c.params;
    if (c.k) jc["k"] = *c.k;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["pass"] = c.pass;
    jc["ms"] = c.ms;
    j["checks"].push_back(std::move(jc));
  }
  return j.dump(2);
}

std::string report_text(const Report& report) {
  std::string out;
  long long passed = 0;
  for (const auto& c : report.checks) {
    out += c.pass ? "[PASS] " : "[FAIL] ";
    out += c.id;
    if (!c.params.empty()) out += "  " + c.params;
    if (c.k) out += "  k=" + std::to_string(*c.k);
    out += "  (" + std::to_string(c.ms) + " ms)\n";
    if (!c.pass) {
      out += "       expected: " + c.expected + "\n";
      out += "       computed: " + c.computed + "\n";
    }
    if (c.pass) ++passed;
  }
  out += (report.pass ? "PASS" : "FAIL");
  out += ": " + std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
         " checks\n";
  return out;
}

}  // namespace cli
