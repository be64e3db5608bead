#pragma once

#include <string>
#include <vector>

#include "report.hpp"

// One runner per verification area; each returns self-timed records that
// make_report assembles. The CLI and the acceptance suite share these.
namespace cli {

std::string default_golden_path();

std::vector<CheckRecord> check_tables(const std::string& golden_path);
std::vector<CheckRecord> check_bound();
std::vector<CheckRecord> check_lemmas();
std::vector<CheckRecord> check_generating();
std::vector<CheckRecord> check_cauchy_cross();
// p = q = 0 runs the default shapes (2,2), (2,3), (3,3); a positive pair runs just that shape.
std::vector<CheckRecord> check_higgs(int samples, unsigned long long seed, int p = 0, int q = 0);
std::vector<CheckRecord> check_strata();
std::vector<CheckRecord> check_invariants();

}  // namespace cli
