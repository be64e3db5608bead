#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cli {

struct CheckRecord {
  std::string id;
  std::string family;
  std::string params;
  std::optional<int> k;
  std::string expected;
  std::string computed;
  bool pass = false;
  long long ms = 0;
};

struct Report {
  std::string version = "1.0";
  std::vector<CheckRecord> checks;
  bool pass = true;
};

// records sorted by id; overall pass iff every record passes
Report make_report(std::vector<CheckRecord> checks);

// canonical two-space-indented object with sorted keys; parsing and
// re-serializing is byte-identical
std::string report_json(const Report& report);

// one line per record, failures carry their expected/computed pair
std::string report_text(const Report& report);

}  // namespace cli
