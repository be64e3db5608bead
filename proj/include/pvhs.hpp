#pragma once

#include <optional>
#include <string>

#include "repchar.hpp"
#include "schur.hpp"

namespace pvhs {

enum class DomainFamily { I, II, III, IV, V, VI };

std::string family_name(DomainFamily f);
DomainFamily family_from_string(const std::string& s);

// One irreducible bounded symmetric domain in its canonical polarized
// variation: isotropy representation data plus the ambient group with its
// marked special node.
struct DomainSpec {
  DomainFamily family = DomainFamily::I;
  int p = 0, q = 0;  // type I parameters (normalized p <= q)
  int n = 0;         // parameter of types II, III, IV
  int rank = 0;
  long long dimension = 0;
  repchar::Algebra isotropy;         // semisimple part of K
  repchar::IrrepLabel tangent;       // label of T = Hom(E^top, E^next), charge 2
  rootsys::RootSystem group;         // ambient simple G
  int special_node = 0;              // 1-based node of group
  int pvhs_weight = 0;               // weight of the variation, equals rank
  // Hodge levels 0..rank; level i carries charge -rank + 2i and level 0 is
  // the trivial (Calabi-Yau) line
  std::vector<repchar::IrrepLabel> hodge;
  std::string name;
};

// catalog(I, p, q); catalog(II, n); catalog(III, n); catalog(IV, n);
// catalog(V); catalog(VI)
DomainSpec catalog(DomainFamily family, int a = 0, int b = 0);

// partition <-> sl(m) label bridge (consecutive differences; determinants
// are dropped and tracked by charge)
rootsys::Vec label_of_partition(const schur::Partition& lam, int m);
schur::Partition partition_from_label(const rootsys::Vec& label, long long boxes);

// label of the S^k(T) component S_lam (paired across factors for type I)
repchar::IrrepLabel classical_label(const DomainSpec& spec, const schur::Partition& lam, int k);
schur::Partition classical_partition(const DomainSpec& spec, const repchar::IrrepLabel& hw);

repchar::Decomposition sym_tangent(const DomainSpec& spec, int k);
repchar::Decomposition image_J_k(const DomainSpec& spec, int k);
repchar::Decomposition kernel_I_k(const DomainSpec& spec, int k);

struct WitnessEntry {
  // constructive mu with lam/mu the right strip shape, classical families only
  std::optional<schur::Partition> mu;
  long long mult_in_product = 0;  // multiplicity in I_2 (x) S^{k-2}(T)
};

struct GradedIdealReport {
  int k = 0;
  repchar::Decomposition sym_k;
  repchar::Decomposition j_k;
  repchar::Decomposition i_k;
  bool contained = false;
  std::map<repchar::IrrepLabel, WitnessEntry, rootsys::WeightLess> witnesses;
};

// Does I_2 (x) S^{k-2}(T) surject onto I_k component-wise?  Valid for
// 2 <= k <= rank + 1.
GradedIdealReport generating_check(const DomainSpec& spec, int k);

// max over weights beta of the ambient fundamental representation at the
// special node of |beta(H_psi)|, psi the highest root (type VI also checks
// psi = alpha_7); the criterion value is exactly 1
rootsys::Rat verify_weight_bound(const DomainSpec& spec);

struct GoldenTables {
  std::vector<rootsys::Vec> e6;  // 27 tuples
  std::vector<rootsys::Vec> e7;  // 56 tuples
};
const GoldenTables& golden_tables();         // embedded copy
GoldenTables load_golden_tables(const std::string& path);

// dimension of the k-th rank stratum for SU(n,n): matrices of rank <= k
long long strata_dimension_typeA(int n, int k);

std::string component_string(const DomainSpec& spec, const repchar::IrrepLabel& hw);
std::string decomposition_string(const DomainSpec& spec, const repchar::Decomposition& dec);

}  // namespace pvhs
