// Acceptance gate: one pass/fail line per criterion, exact arithmetic throughout.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "checks.hpp"
#include "report.hpp"

namespace {

int failures = 0;

std::vector<cli::CheckRecord> run_criterion(
    int number, const std::string& name,
    const std::function<std::vector<cli::CheckRecord>()>& runner) {
  auto start = std::chrono::steady_clock::now();
  auto records = runner();
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  bool pass = true;
  for (const auto& rec : records) pass = pass && rec.pass;
  std::printf("[%s] criterion %d: %s (%zu checks, %lld ms)\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), records.size(), (long long)ms);
  for (const auto& rec : records) {
    if (rec.pass) continue;
    std::printf("       %s\n         expected: %s\n         computed: %s\n", rec.id.c_str(),
                rec.expected.c_str(), rec.computed.c_str());
  }
  if (!pass) ++failures;
  return records;
}

}  // namespace

int main() {
  run_criterion(1, "golden weight tables",
                [] { return cli::check_tables(cli::default_golden_path()); });
  run_criterion(2, "highest weight bound", cli::check_bound);

  auto lemmas = run_criterion(3, "decomposition lemmas", cli::check_lemmas);
  for (const auto& rec : lemmas) {
    // The transcribed I_2*S^2 line for the 27-dimensional case lists one label twice; the
    // computation confirms it as a multiplicity: nine summands over eight distinct labels.
    if (rec.id == "lemma/E7/7-I2xS2")
      std::printf("       note: %s computed %s\n", rec.id.c_str(), rec.computed.c_str());
  }

  run_criterion(4, "degree-two generating property", cli::check_generating);
  run_criterion(5, "Cauchy/plethysm cross-oracle", cli::check_cauchy_cross);
  run_criterion(6, "Higgs membership oracle (1000 samples, seed 7)",
                [] { return cli::check_higgs(1000, 7); });
  run_criterion(7, "strata dimensions", cli::check_strata);
  run_criterion(8, "structural invariants", cli::check_invariants);

  if (failures > 0) {
    std::fprintf(stderr, "[FAIL] %d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria pass\n");
  return 0;
}
