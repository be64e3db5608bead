#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "checks.hpp"
#include "pvhs.hpp"
#include "report.hpp"

namespace {

using rootsys::Int;
using rootsys::Vec;
using rootsys::Weight;

rootsys::Family algebra_from_string(const std::string& s) {
  if (s == "A") return rootsys::Family::A;
  if (s == "B") return rootsys::Family::B;
  if (s == "C") return rootsys::Family::C;
  if (s == "D") return rootsys::Family::D;
  if (s == "E6") return rootsys::Family::E6;
  if (s == "E7") return rootsys::Family::E7;
  throw std::invalid_argument("unknown algebra '" + s + "' (expected A, B, C, D, E6, E7)");
}

Vec parse_label(const std::string& text, int rank) {
  Vec out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    out.push_back(std::stoll(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad label entry '" + item + "'");
  }
  if ((int)out.size() != rank)
    throw std::invalid_argument("label has " + std::to_string(out.size()) + " entries, rank is " +
                                std::to_string(rank));
  return out;
}

int run_weights(const std::string& algebra, int rank, int fundamental, const std::string& label,
                bool json) {
  rootsys::Family fam = algebra_from_string(algebra);
  if (fam == rootsys::Family::E6) rank = 6;
  if (fam == rootsys::Family::E7) rank = 7;
  if (rank <= 0) throw std::invalid_argument("--rank is required for classical algebras");
  if ((fundamental > 0) == !label.empty())
    throw std::invalid_argument("give exactly one of --fundamental or --label");
  Vec coords;
  if (fundamental > 0) {
    if (fundamental > rank) throw std::invalid_argument("--fundamental exceeds the rank");
    coords.assign(rank, 0);
    coords[fundamental - 1] = 1;
  } else {
    coords = parse_label(label, rank);
  }
  auto alg = repchar::make_algebra({rootsys::build_root_system(fam, rank)});
  auto ws = repchar::weight_system(alg, Weight{coords, 0});
  if (json) {
    nlohmann::json j;
    j["algebra"] = algebra;
    j["rank"] = rank;
    j["label"] = coords;
    j["weights"] = nlohmann::json::array();
    long long total = 0;
    for (const auto& [w, m] : ws.entries) {
      j["weights"].push_back({{"coords", w.coords}, {"mult", m}});
      total += m;
    }
    j["total"] = total;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [w, m] : ws.entries)
      std::cout << rootsys::to_string(w.coords) << "  " << m << "\n";
  }
  return 0;
}

pvhs::DomainSpec spec_from_flags(const std::string& family, int p, int q, int n) {
  auto fam = pvhs::family_from_string(family);
  switch (fam) {
    case pvhs::DomainFamily::I:
      if (p <= 0 || q <= 0) throw std::invalid_argument("family I needs --p and --q");
      return pvhs::catalog(fam, p, q);
    case pvhs::DomainFamily::II:
    case pvhs::DomainFamily::III:
    case pvhs::DomainFamily::IV:
      if (n <= 0) throw std::invalid_argument("family " + family + " needs --n");
      return pvhs::catalog(fam, n);
    default:
      return pvhs::catalog(fam);
  }
}

int run_decompose(const std::string& family, int p, int q, int n, int k, bool json) {
  if (k < 0 || k > 12) throw std::invalid_argument("--k must lie in 0..12");
  auto spec = spec_from_flags(family, p, q, n);
  auto dec = pvhs::sym_tangent(spec, k);
  if (json) {
    nlohmann::json j;
    j["family"] = pvhs::family_name(spec.family);
    j["domain"] = spec.name;
    j["k"] = k;
    j["components"] = nlohmann::json::array();
    for (const auto& [hw, m] : dec)
      j["components"].push_back({{"coords", hw.coords},
                                 {"charge", hw.charge},
                                 {"mult", m},
                                 {"display", pvhs::component_string(spec, hw)}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [hw, m] : dec) {
      if (m != 1) std::cout << m << "*";
      std::cout << pvhs::component_string(spec, hw) << "\n";
    }
  }
  return 0;
}

int run_verify(bool tables, bool bound, bool lemmas, bool generating, bool cauchy, bool higgs_f,
               bool strata, bool invariants, const std::string& family,
               const std::string& params, int samples, unsigned long long seed, int p, int q,
               const std::string& golden, bool json) {
  bool any = tables || bound || lemmas || generating || cauchy || higgs_f || strata || invariants;
  std::vector<cli::CheckRecord> records;
  auto take = [&](std::vector<cli::CheckRecord> recs) {
    for (auto& r : recs) records.push_back(std::move(r));
  };
  if (!any || tables) take(cli::check_tables(golden));
  if (!any || bound) take(cli::check_bound());
  if (!any || lemmas) take(cli::check_lemmas());
  if (!any || generating) take(cli::check_generating());
  if (!any || cauchy) take(cli::check_cauchy_cross());
  if ((p > 0) != (q > 0)) throw std::invalid_argument("--p and --q must be given together");
  if (!any || higgs_f) take(cli::check_higgs(samples, seed, p, q));
  if (!any || strata) take(cli::check_strata());
  if (!any || invariants) take(cli::check_invariants());
  if (!family.empty() || !params.empty()) {
    std::vector<cli::CheckRecord> kept;
    for (auto& r : records) {
      if (!family.empty() && r.family != family) continue;
      if (!params.empty() && r.params.find(params) == std::string::npos) continue;
      kept.push_back(std::move(r));
    }
    records = std::move(kept);
  }
  auto report = cli::make_report(std::move(records));
  std::cout << (json ? cli::report_json(report) + "\n" : cli::report_text(report));
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of characteristic subvarieties of canonical PVHS"};
  app.require_subcommand(1);

  auto* w = app.add_subcommand("weights", "list the weight system of an irreducible module");
  std::string w_algebra;
  int w_rank = 0, w_fundamental = 0;
  std::string w_label;
  bool w_json = false;
  w->add_option("--algebra", w_algebra, "A, B, C, D, E6 or E7")->required();
  w->add_option("--rank", w_rank, "rank for classical algebras");
  w->add_option("--fundamental", w_fundamental, "index of a fundamental weight (1-based)");
  w->add_option("--label", w_label, "comma-separated dominant label, e.g. 0,1,0");
  w->add_flag("--json", w_json, "structured output");

  auto* d = app.add_subcommand("decompose", "decompose a symmetric power of the tangent module");
  std::string d_family;
  int d_p = 0, d_q = 0, d_n = 0, d_k = -1;
  bool d_json = false;
  d->add_option("--family", d_family, "I, II, III, IV, V or VI")->required();
  d->add_option("--p", d_p, "type I block size");
  d->add_option("--q", d_q, "type I block size");
  d->add_option("--n", d_n, "parameter for families II, III, IV");
  d->add_option("--k", d_k, "symmetric power degree")->required();
  d->add_flag("--json", d_json, "structured output");

  auto* v = app.add_subcommand("verify", "run verification checks (all when no area flag given)");
  bool v_tables = false, v_bound = false, v_lemmas = false, v_generating = false;
  bool v_cauchy = false, v_higgs = false, v_strata = false, v_invariants = false;
  std::string v_family, v_params;
  int v_samples = 1000, v_p = 0, v_q = 0;
  unsigned long long v_seed = 7;
  std::string v_golden = cli::default_golden_path();
  bool v_json = false;
  v->add_flag("--tables", v_tables, "golden weight tables");
  v->add_flag("--bound", v_bound, "highest weight bound");
  v->add_flag("--lemmas", v_lemmas, "decomposition lemmas");
  v->add_flag("--generating", v_generating, "degree-two generating property");
  v->add_flag("--cauchy", v_cauchy, "Cauchy cross-oracle");
  v->add_flag("--higgs", v_higgs, "Higgs membership oracle");
  v->add_flag("--strata", v_strata, "strata dimensions");
  v->add_flag("--invariants", v_invariants, "structural invariants");
  v->add_option("--family", v_family, "keep only records of this family");
  v->add_option("--params", v_params, "keep only records whose params contain this text");
  v->add_option("--samples", v_samples, "random matrices per shape (default 1000)");
  v->add_option("--seed", v_seed, "random seed (default 7)");
  v->add_option("--p", v_p, "restrict the Higgs oracle to one shape (with --q)");
  v->add_option("--q", v_q, "restrict the Higgs oracle to one shape (with --p)");
  v->add_option("--golden-file", v_golden, "path to the golden weight tables");
  v->add_flag("--json", v_json, "structured report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (w->parsed()) return run_weights(w_algebra, w_rank, w_fundamental, w_label, w_json);
    if (d->parsed()) return run_decompose(d_family, d_p, d_q, d_n, d_k, d_json);
    return run_verify(v_tables, v_bound, v_lemmas, v_generating, v_cauchy, v_higgs, v_strata,
                      v_invariants, v_family, v_params, v_samples, v_seed, v_p, v_q, v_golden,
                      v_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
