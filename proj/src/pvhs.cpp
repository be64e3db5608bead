#include "pvhs.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pvhs {

using repchar::Algebra;
using repchar::Decomposition;
using repchar::IrrepLabel;
using rootsys::Family;
using rootsys::Int;
using rootsys::Vec;
using rootsys::Weight;
using schur::Partition;

std::string family_name(DomainFamily f) {
  switch (f) {
    case DomainFamily::I: return "I";
    case DomainFamily::II: return "II";
    case DomainFamily::III: return "III";
    case DomainFamily::IV: return "IV";
    case DomainFamily::V: return "V";
    case DomainFamily::VI: return "VI";
  }
  throw std::logic_error("family_name: bad enum value");
}

DomainFamily family_from_string(const std::string& s) {
  if (s == "I") return DomainFamily::I;
  if (s == "II") return DomainFamily::II;
  if (s == "III") return DomainFamily::III;
  if (s == "IV") return DomainFamily::IV;
  if (s == "V") return DomainFamily::V;
  if (s == "VI") return DomainFamily::VI;
  throw std::invalid_argument("unknown domain family '" + s + "'");
}

Vec label_of_partition(const Partition& lam, int m) {
  if (!schur::is_partition(lam)) throw std::invalid_argument("label_of_partition: not a partition");
  if ((int)lam.size() > m)
    throw std::invalid_argument("label_of_partition: " + schur::to_string(lam) +
                                " has more than " + std::to_string(m) + " rows");
  Vec out(m > 0 ? m - 1 : 0, 0);
  for (int i = 0; i < m - 1; ++i) {
    Int cur = i < (int)lam.size() ? lam[i] : 0;
    Int next = i + 1 < (int)lam.size() ? lam[i + 1] : 0;
    out[i] = cur - next;
  }
  return out;
}

Partition partition_from_label(const Vec& label, long long boxes) {
  int m = (int)label.size() + 1;
  Partition base(m, 0);
  for (int i = m - 2; i >= 0; --i) {
    if (label[i] < 0) throw std::invalid_argument("partition_from_label: label not dominant");
    base[i] = base[i + 1] + label[i];
  }
  long long total = 0;
  for (long long x : base) total += x;
  if (boxes < total || (boxes - total) % m != 0)
    throw std::invalid_argument("partition_from_label: box count " + std::to_string(boxes) +
                                " unreachable from " + rootsys::to_string(label));
  long long pad = (boxes - total) / m;
  for (auto& x : base) x += pad;
  while (!base.empty() && base.back() == 0) base.pop_back();
  return base;
}

namespace {

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// so(m) as a product of simple factors, m >= 3
std::vector<rootsys::RootSystem> so_factors(int m) {
  if (m == 3) return {rootsys::build_root_system(Family::A, 1)};
  if (m == 4)
    return {rootsys::build_root_system(Family::A, 1), rootsys::build_root_system(Family::A, 1)};
  if (m % 2 == 1) return {rootsys::build_root_system(Family::B, (m - 1) / 2)};
  return {rootsys::build_root_system(Family::D, m / 2)};
}

// vector representation label of so(m)
Vec so_vector_label(int m) {
  if (m == 3) return {2};
  if (m == 4) return {1, 1};
  int l = (m % 2 == 1) ? (m - 1) / 2 : m / 2;
  Vec out(l, 0);
  out[0] = 1;
  return out;
}

}  // namespace

IrrepLabel classical_label(const DomainSpec& spec, const Partition& lam, int k) {
  switch (spec.family) {
    case DomainFamily::I: {
      if (schur::weight_of(lam) != k)
        throw std::invalid_argument("classical_label: type I wants a partition of k");
      return Weight{concat(label_of_partition(lam, spec.p), label_of_partition(lam, spec.q)),
                    2 * (Int)k};
    }
    case DomainFamily::II:
    case DomainFamily::III: {
      if (schur::weight_of(lam) != 2 * (long long)k)
        throw std::invalid_argument("classical_label: types II/III want a partition of 2k");
      return Weight{label_of_partition(lam, spec.n), 2 * (Int)k};
    }
    default:
      throw std::invalid_argument("classical_label: not a classical family");
  }
}

Partition classical_partition(const DomainSpec& spec, const IrrepLabel& hw) {
  if (hw.charge < 0 || hw.charge % 2 != 0)
    throw std::invalid_argument("classical_partition: charge is not an even degree");
  long long k = hw.charge / 2;
  switch (spec.family) {
    case DomainFamily::I: {
      Vec first(hw.coords.begin(), hw.coords.begin() + (spec.p - 1));
      Partition lam = partition_from_label(first, k);
      if (classical_label(spec, lam, (int)k) != hw)
        throw std::invalid_argument("classical_partition: component is not a paired functor");
      return lam;
    }
    case DomainFamily::II:
    case DomainFamily::III: {
      Partition lam = partition_from_label(hw.coords, 2 * k);
      if (classical_label(spec, lam, (int)k) != hw)
        throw std::invalid_argument("classical_partition: label does not match its degree");
      return lam;
    }
    default:
      throw std::invalid_argument("classical_partition: not a classical family");
  }
}

DomainSpec catalog(DomainFamily family, int a, int b) {
  DomainSpec spec;
  spec.family = family;
  switch (family) {
    case DomainFamily::I: {
      if (a < 1 || b < 1) throw std::invalid_argument("catalog: type I needs p, q >= 1");
      int p = a, q = b;
      if (p > q) std::swap(p, q);
      spec.p = p;
      spec.q = q;
      spec.rank = p;
      std::vector<rootsys::RootSystem> factors;
      if (p >= 2) factors.push_back(rootsys::build_root_system(Family::A, p - 1));
      if (q >= 2) factors.push_back(rootsys::build_root_system(Family::A, q - 1));
      spec.isotropy = repchar::make_algebra(std::move(factors));
      spec.tangent = classical_label(spec, {1}, 1);
      spec.group = rootsys::build_root_system(Family::A, p + q - 1);
      spec.special_node = p;
      spec.name = "I(" + std::to_string(p) + "," + std::to_string(q) + ")";
      for (int i = 0; i <= spec.rank; ++i) {
        Vec coords = classical_label(spec, Partition((size_t)i, 1), i).coords;
        spec.hodge.push_back(Weight{coords, -spec.rank + 2 * i});
      }
      break;
    }
    case DomainFamily::II: {
      if (a < 3) throw std::invalid_argument("catalog: type II needs n >= 3");
      if (b != 0) throw std::invalid_argument("catalog: type II takes one parameter");
      spec.n = a;
      spec.rank = a / 2;
      spec.isotropy = repchar::make_algebra({rootsys::build_root_system(Family::A, a - 1)});
      spec.tangent = classical_label(spec, {1, 1}, 1);
      spec.group = rootsys::build_root_system(Family::D, a);
      spec.special_node = a;
      spec.name = "II(" + std::to_string(a) + ")";
      for (int i = 0; i <= spec.rank; ++i) {
        Vec coords = classical_label(spec, Partition((size_t)(2 * i), 1), i).coords;
        spec.hodge.push_back(Weight{coords, -spec.rank + 2 * i});
      }
      break;
    }
    case DomainFamily::III: {
      if (a < 2) throw std::invalid_argument("catalog: type III needs n >= 2");
      if (b != 0) throw std::invalid_argument("catalog: type III takes one parameter");
      spec.n = a;
      spec.rank = a;
      spec.isotropy = repchar::make_algebra({rootsys::build_root_system(Family::A, a - 1)});
      spec.tangent = classical_label(spec, {2}, 1);
      spec.group = rootsys::build_root_system(Family::C, a);
      spec.special_node = a;
      spec.name = "III(" + std::to_string(a) + ")";
      for (int i = 0; i <= spec.rank; ++i) {
        Vec coords = classical_label(spec, Partition((size_t)i, 2), i).coords;
        spec.hodge.push_back(Weight{coords, -spec.rank + 2 * i});
      }
      break;
    }
    case DomainFamily::IV: {
      if (a < 3) throw std::invalid_argument("catalog: type IV needs n >= 3");
      if (b != 0) throw std::invalid_argument("catalog: type IV takes one parameter");
      spec.n = a;
      spec.rank = 2;
      spec.isotropy = repchar::make_algebra(so_factors(a));
      spec.tangent = Weight{so_vector_label(a), 2};
      int m = a + 2;
      spec.group = (m % 2 == 1) ? rootsys::build_root_system(Family::B, (m - 1) / 2)
                                : rootsys::build_root_system(Family::D, m / 2);
      spec.special_node = 1;
      spec.name = "IV(" + std::to_string(a) + ")";
      spec.hodge.push_back(Weight{Vec(spec.isotropy.rank, 0), -2});
      spec.hodge.push_back(Weight{spec.tangent.coords, 0});
      spec.hodge.push_back(Weight{Vec(spec.isotropy.rank, 0), 2});
      break;
    }
    case DomainFamily::V: {
      if (a != 0 || b != 0) throw std::invalid_argument("catalog: type V takes no parameters");
      spec.rank = 2;
      spec.isotropy = repchar::make_algebra({rootsys::build_root_system(Family::D, 5)});
      spec.tangent = Weight{{0, 0, 0, 1, 0}, 2};
      spec.group = rootsys::build_root_system(Family::E6, 6);
      spec.special_node = 1;
      spec.name = "V";
      spec.hodge.push_back(Weight{{0, 0, 0, 0, 0}, -2});
      spec.hodge.push_back(Weight{{0, 0, 0, 1, 0}, 0});
      spec.hodge.push_back(Weight{{1, 0, 0, 0, 0}, 2});
      break;
    }
    case DomainFamily::VI: {
      if (a != 0 || b != 0) throw std::invalid_argument("catalog: type VI takes no parameters");
      spec.rank = 3;
      spec.isotropy = repchar::make_algebra({rootsys::build_root_system(Family::E6, 6)});
      spec.tangent = Weight{{1, 0, 0, 0, 0, 0}, 2};
      spec.group = rootsys::build_root_system(Family::E7, 7);
      spec.special_node = 7;
      spec.name = "VI";
      spec.hodge.push_back(Weight{{0, 0, 0, 0, 0, 0}, -3});
      spec.hodge.push_back(Weight{{1, 0, 0, 0, 0, 0}, -1});
      spec.hodge.push_back(Weight{{0, 0, 0, 0, 0, 1}, 1});
      spec.hodge.push_back(Weight{{0, 0, 0, 0, 0, 0}, 3});
      break;
    }
  }
  spec.pvhs_weight = spec.rank;
  spec.dimension = repchar::weyl_dimension(spec.isotropy, spec.tangent).convert_to<long long>();
  if (spec.group.highest_root[spec.special_node - 1] != 1)
    throw std::logic_error("catalog: special node is not special");
  return spec;
}

Decomposition sym_tangent(const DomainSpec& spec, int k) {
  if (k < 0) throw std::invalid_argument("sym_tangent: negative degree");
  Decomposition out;
  switch (spec.family) {
    case DomainFamily::I:
      for (const auto& lam : schur::cauchy_sym(k, spec.p, spec.q))
        out[classical_label(spec, lam, k)] = 1;
      break;
    case DomainFamily::II:
      for (const auto& lam : schur::sym_of_ext(k, spec.n))
        out[classical_label(spec, lam, k)] = 1;
      break;
    case DomainFamily::III:
      for (const auto& lam : schur::sym_of_sym(k, spec.n))
        out[classical_label(spec, lam, k)] = 1;
      break;
    default: {
      auto ws = repchar::weight_system(spec.isotropy, spec.tangent);
      out = repchar::decompose(spec.isotropy, repchar::symmetric_power(ws, k));
    }
  }
  return out;
}

Decomposition image_J_k(const DomainSpec& spec, int k) {
  if (k < 0) throw std::invalid_argument("image_J_k: negative degree");
  Decomposition out;
  if (k > spec.rank) return out;  // theta^k = 0 past the rank
  out[Weight{spec.hodge[k].coords, 2 * (Int)k}] = 1;
  return out;
}

Decomposition kernel_I_k(const DomainSpec& spec, int k) {
  Decomposition sym = sym_tangent(spec, k);
  for (const auto& [hw, m] : image_J_k(spec, k)) {
    auto it = sym.find(hw);
    if (it == sym.end() || it->second < m)
      throw std::logic_error("kernel_I_k: J_" + std::to_string(k) +
                             " is not a summand of S^k at " + rootsys::to_string(hw));
    it->second -= m;
    if (it->second == 0) sym.erase(it);
  }
  return sym;
}

namespace {

bool rectangular(const Partition& lam) {
  for (long long x : lam)
    if (x != lam[0]) return false;
  return !lam.empty();
}

Partition trimmed(Partition mu) {
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  if (!schur::is_partition(mu))
    throw std::logic_error("witness rule produced a non-partition " + schur::to_string(mu));
  return mu;
}

// two boxes off, from the last row of a rectangle or from the first descent
// row plus the last row
Partition witness_typeA(const Partition& lam) {
  Partition mu = lam;
  if (rectangular(lam)) {
    mu.back() -= 2;
  } else {
    size_t i0 = 0;
    while (lam[i0] == lam[i0 + 1]) ++i0;
    mu[i0] -= 1;
    mu.back() -= 1;
  }
  return trimmed(std::move(mu));
}

// four boxes off: all from the last row of a rectangle, else two from the
// last descent row and two from the last row
Partition witness_typeC(const Partition& lam) {
  Partition mu = lam;
  if (rectangular(lam)) {
    mu.back() -= 4;
  } else {
    size_t s = lam.size() - 2;
    while (lam[s] == lam[s + 1]) --s;
    mu[s] -= 2;
    mu.back() -= 2;
  }
  return trimmed(std::move(mu));
}

// conjugate side of the type C move: lam' is an even-row partition with at
// least two rows here, since (1^{2k}) never lies in I_k
Partition witness_typeD(const Partition& lam) {
  Partition t = schur::conjugate(lam);
  Partition mt = t;
  if (rectangular(t)) {
    mt[t.size() - 2] -= 2;
    mt[t.size() - 1] -= 2;
  } else {
    size_t i0 = 0;
    while (t[i0] == t[i0 + 1]) ++i0;
    mt[i0] -= 2;
    mt.back() -= 2;
  }
  return schur::conjugate(trimmed(std::move(mt)));
}

bool list_contains(const std::vector<Partition>& v, const Partition& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

GradedIdealReport generating_check(const DomainSpec& spec, int k) {
  if (k < 2 || k > spec.rank + 1)
    throw std::invalid_argument("generating_check: need 2 <= k <= rank + 1");
  GradedIdealReport rep;
  rep.k = k;
  rep.sym_k = sym_tangent(spec, k);
  rep.j_k = image_J_k(spec, k);
  rep.i_k = kernel_I_k(spec, k);
  Decomposition i2 = kernel_I_k(spec, 2);
  Decomposition sk2 = sym_tangent(spec, k - 2);

  bool classical = spec.family == DomainFamily::I || spec.family == DomainFamily::II ||
                   spec.family == DomainFamily::III;
  Decomposition prod;
  if (classical) {
    for (const auto& [ha, ma] : i2)
      for (const auto& [hb, mb] : sk2) {
        Partition pa = classical_partition(spec, ha);
        Partition pb = classical_partition(spec, hb);
        if (spec.family == DomainFamily::I) {
          auto left = schur::lr_coefficients(pa, pb, spec.p);
          auto right = schur::lr_coefficients(pa, pb, spec.q);
          for (const auto& [n1, m1] : left)
            for (const auto& [n2, m2] : right) {
              Vec coords =
                  concat(label_of_partition(n1, spec.p), label_of_partition(n2, spec.q));
              prod[Weight{coords, 2 * (Int)k}] += ma * mb * m1 * m2;
            }
        } else {
          for (const auto& [nu, m] : schur::lr_coefficients(pa, pb, spec.n))
            prod[classical_label(spec, nu, k)] += ma * mb * m;
        }
      }
  } else {
    prod = repchar::tensor_product(spec.isotropy, i2, sk2);
  }

  rep.contained = true;
  for (const auto& [hw, m] : rep.i_k) {
    WitnessEntry entry;
    auto it = prod.find(hw);
    entry.mult_in_product = it == prod.end() ? 0 : it->second;
    if (entry.mult_in_product <= 0) rep.contained = false;
    if (classical) {
      Partition lam = classical_partition(spec, hw);
      Partition mu;
      bool ok = false;
      switch (spec.family) {
        case DomainFamily::I:
          mu = witness_typeA(lam);
          ok = schur::weight_of(mu) == (long long)k - 2 &&
               list_contains(schur::pieri_rows(mu, 2, spec.p), lam);
          break;
        case DomainFamily::III:
          mu = witness_typeC(lam);
          ok = schur::weight_of(mu) == 2 * ((long long)k - 2) &&
               list_contains(schur::pieri_rows(mu, 4, spec.n), lam);
          break;
        case DomainFamily::II: {
          mu = witness_typeD(lam);
          auto lr = schur::lr_coefficients({2, 2}, mu, spec.n);
          ok = schur::weight_of(mu) == 2 * ((long long)k - 2) && lr.count(lam) && lr.at(lam) >= 1;
          break;
        }
        default: break;
      }
      if (!ok)
        throw std::logic_error("generating_check: witness rule failed on " +
                               schur::to_string(lam) + " in " + spec.name);
      entry.mu = mu;
    }
    rep.witnesses[hw] = entry;
  }
  return rep;
}

rootsys::Rat verify_weight_bound(const DomainSpec& spec) {
  Algebra g = repchar::make_algebra({spec.group});
  Vec coords(spec.group.rank, 0);
  coords[spec.special_node - 1] = 1;
  IrrepLabel w{coords, 0};
  if (repchar::weyl_dimension(g, w) > 10000)
    throw std::runtime_error("verify_weight_bound: fundamental representation exceeds 10^4");
  auto ws = repchar::weight_system(g, w);
  std::vector<Vec> psis{spec.group.highest_root};
  if (spec.family == DomainFamily::VI) {
    Vec a7(7, 0);
    a7[6] = 1;
    psis.push_back(a7);
  }
  rootsys::Rat best(0);
  for (const auto& [beta, m] : ws.entries)
    for (const Vec& psi : psis) {
      rootsys::Rat v = rootsys::coroot_pairing(spec.group, beta, psi);
      if (v < rootsys::Rat(0)) v = -v;
      if (v > best) best = v;
    }
  return best;
}

const GoldenTables& golden_tables() {
  static const GoldenTables tables = {
      {
          {1, 0, 0, 0, 0, 0},   {-1, 0, 1, 0, 0, 0},  {0, 0, -1, 1, 0, 0},
          {0, 1, 0, -1, 1, 0},  {0, 1, 0, 0, -1, 1},  {0, -1, 0, 0, 1, 0},
          {0, 1, 0, 0, 0, -1},  {0, -1, 0, 1, -1, 1}, {0, 0, 1, -1, 0, 1},
          {0, -1, 0, 1, 0, -1}, {1, 0, -1, 0, 0, 1},  {0, 0, 1, -1, 1, -1},
          {1, 0, -1, 0, 1, -1}, {0, 0, 1, 0, -1, 0},  {-1, 0, 0, 0, 0, 1},
          {1, 0, -1, 1, -1, 0}, {-1, 0, 0, 0, 1, -1}, {1, 1, 0, -1, 0, 0},
          {-1, 0, 0, 1, -1, 0}, {1, -1, 0, 0, 0, 0},  {-1, 1, 1, -1, 0, 0},
          {0, 1, -1, 0, 0, 0},  {-1, -1, 1, 0, 0, 0}, {0, -1, -1, 1, 0, 0},
          {0, 0, 0, -1, 1, 0},  {0, 0, 0, 0, -1, 1},  {0, 0, 0, 0, 0, -1},
      },
      {
          {0, 0, 0, 0, 0, 0, 1},    {0, 0, 0, 0, 0, 1, -1},  {0, 0, 0, 0, 1, -1, 0},
          {0, 0, 0, 1, -1, 0, 0},   {0, 1, 1, -1, 0, 0, 0},  {1, 1, -1, 0, 0, 0, 0},
          {0, -1, 1, 0, 0, 0, 0},   {1, -1, -1, 1, 0, 0, 0}, {-1, 1, 0, 0, 0, 0, 0},
          {1, 0, 0, -1, 1, 0, 0},   {-1, -1, 0, 1, 0, 0, 0}, {1, 0, 0, 0, -1, 1, 0},
          {-1, 0, 1, -1, 1, 0, 0},  {1, 0, 0, 0, 0, -1, 1},  {0, 0, -1, 0, 1, 0, 0},
          {-1, 0, 1, 0, -1, 1, 0},  {1, 0, 0, 0, 0, 0, -1},  {0, 0, -1, 1, -1, 1, 0},
          {-1, 0, 1, 0, 0, -1, 1},  {0, 1, 0, -1, 0, 1, 0},  {0, 0, -1, 1, 0, -1, 1},
          {-1, 0, 1, 0, 0, 0, -1},  {0, 1, 0, -1, 1, -1, 1}, {0, 0, -1, 1, 0, 0, -1},
          {0, -1, 0, 0, 0, 1, 0},   {0, 1, 0, 0, -1, 0, 1},  {0, 1, 0, -1, 1, 0, -1},
          {0, -1, 0, 0, 1, -1, 1},  {0, 1, 0, 0, -1, 1, -1}, {0, -1, 0, 1, -1, 0, 1},
          {0, -1, 0, 0, 1, 0, -1},  {0, 1, 0, 0, 0, -1, 0},  {0, 0, 1, -1, 0, 0, 1},
          {0, -1, 0, 1, -1, 1, -1}, {1, 0, -1, 0, 0, 0, 1},  {0, 0, 1, -1, 0, 1, -1},
          {0, -1, 0, 1, 0, -1, 0},  {1, 0, -1, 0, 0, 1, -1}, {0, 0, 1, -1, 1, -1, 0},
          {-1, 0, 0, 0, 0, 0, 1},   {1, 0, -1, 0, 1, -1, 0}, {0, 0, 1, 0, -1, 0, 0},
          {-1, 0, 0, 0, 0, 1, -1},  {1, 0, -1, 1, -1, 0, 0}, {-1, 0, 0, 0, 1, -1, 0},
          {1, 1, 0, -1, 0, 0, 0},   {-1, 0, 0, 1, -1, 0, 0}, {1, -1, 0, 0, 0, 0, 0},
          {-1, 1, 1, -1, 0, 0, 0},  {0, 1, -1, 0, 0, 0, 0},  {-1, -1, 1, 0, 0, 0, 0},
          {0, -1, -1, 1, 0, 0, 0},  {0, 0, 0, -1, 1, 0, 0},  {0, 0, 0, 0, -1, 1, 0},
          {0, 0, 0, 0, 0, -1, 1},   {0, 0, 0, 0, 0, 0, -1},
      },
  };
  return tables;
}

GoldenTables load_golden_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table file " + path);
  GoldenTables out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tag, tuple;
    ss >> tag >> tuple;
    auto bad = [&](const std::string& why) {
      return std::runtime_error(path + ":" + std::to_string(lineno) + ": " + why);
    };
    if (tag != "E6" && tag != "E7") throw bad("expected E6 or E7 tag");
    if (tuple.size() < 2 || tuple.front() != '(' || tuple.back() != ')')
      throw bad("expected a parenthesized tuple");
    Vec v;
    std::string body = tuple.substr(1, tuple.size() - 2);
    std::istringstream bs(body);
    std::string item;
    while (std::getline(bs, item, ',')) {
      size_t used = 0;
      long long val = std::stoll(item, &used);
      if (used != item.size()) throw bad("bad integer '" + item + "'");
      v.push_back(val);
    }
    if (tag == "E6") {
      if (v.size() != 6) throw bad("E6 rows need 6 entries");
      out.e6.push_back(std::move(v));
    } else {
      if (v.size() != 7) throw bad("E7 rows need 7 entries");
      out.e7.push_back(std::move(v));
    }
  }
  if (out.e6.size() != 27 || out.e7.size() != 56)
    throw std::runtime_error(path + ": expected 27 E6 rows and 56 E7 rows, found " +
                             std::to_string(out.e6.size()) + " and " +
                             std::to_string(out.e7.size()));
  return out;
}

namespace {

void combinations(int n, int r, std::vector<std::vector<int>>& out) {
  out.clear();
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if ((int)cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

long long int_det(const std::vector<std::vector<long long>>& m) {
  size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long sum = 0;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
    for (size_t r = 1; r < n; ++r)
      for (size_t s = 0, t = 0; s < n; ++s)
        if (s != j) minor[r - 1][t++] = m[r][s];
    long long term = m[0][j] * int_det(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

long long rational_rank(std::vector<std::vector<boost::rational<long long>>> m) {
  using R = boost::rational<long long>;
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == R(0)) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == R(0)) continue;
      R f = m[r][c] / m[rank][c];
      for (size_t s = c; s < cols; ++s) m[r][s] -= f * m[rank][s];
    }
    ++rank;
  }
  return (long long)rank;
}

}  // namespace

long long strata_dimension_typeA(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("strata_dimension_typeA: need 1 <= k <= n");
  if (k == n) return (long long)n * n;  // the full space
  // Jacobian of every (k+1)-minor at X0 = diag(1,..,1,0,..,0) with k ones:
  // d/dx_{ab} det(X[I,J]) = +- det(X0[I \ a, J \ b]) when a in I, b in J
  std::vector<std::vector<int>> subsets;
  combinations(n, k + 1, subsets);
  std::vector<std::vector<boost::rational<long long>>> jac;
  for (const auto& I : subsets)
    for (const auto& J : subsets) {
      std::vector<boost::rational<long long>> row(n * n, 0);
      bool nonzero = false;
      for (size_t ai = 0; ai < I.size(); ++ai)
        for (size_t bj = 0; bj < J.size(); ++bj) {
          std::vector<std::vector<long long>> minor(k, std::vector<long long>(k));
          for (size_t r = 0, rr = 0; r < I.size(); ++r) {
            if (r == ai) continue;
            for (size_t s = 0, ss = 0; s < J.size(); ++s) {
              if (s == bj) continue;
              minor[rr][ss++] = (I[r] == J[s] && I[r] < k) ? 1 : 0;
            }
            ++rr;
          }
          long long d = int_det(minor);
          if ((ai + bj) % 2 == 1) d = -d;
          if (d != 0) {
            row[I[ai] * n + J[bj]] = d;
            nonzero = true;
          }
        }
      if (nonzero) jac.push_back(std::move(row));
    }
  return (long long)n * n - rational_rank(std::move(jac));
}

std::string component_string(const DomainSpec& spec, const IrrepLabel& hw) {
  std::string prefix = "C(" + std::to_string(hw.charge) + ")";
  bool classical = spec.family == DomainFamily::I || spec.family == DomainFamily::II ||
                   spec.family == DomainFamily::III;
  if (classical && hw.charge >= 0 && hw.charge % 2 == 0) {
    try {
      Partition lam = classical_partition(spec, hw);
      if (lam.empty()) return prefix;
      std::string ps = schur::to_string(lam);
      if (spec.family == DomainFamily::I) return prefix + "*" + ps + "x" + ps;
      return prefix + "*" + ps;
    } catch (const std::invalid_argument&) {
      // fall through to the generic form
    }
  }
  bool trivial = true;
  for (Int c : hw.coords)
    if (c != 0) trivial = false;
  if (trivial) return prefix;
  return prefix + "*G" + rootsys::to_string(hw.coords);
}

std::string decomposition_string(const DomainSpec& spec, const Decomposition& dec) {
  if (dec.empty()) return "0";
  std::string out;
  for (const auto& [hw, m] : dec) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += component_string(spec, hw);
  }
  return out;
}

}  // namespace pvhs
