#include "repchar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace repchar {

namespace {

using rootsys::RootSystem;

Vec slice(const Vec& coords, int off, int len) {
  return Vec(coords.begin() + off, coords.begin() + off + len);
}

// root-lattice coordinates of a fw vector within one factor; false when the
// vector is not in the root lattice
bool root_coords(const RootSystem& rs, const Vec& fw, Vec& out) {
  out.assign(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i) {
    Int s = 0;
    for (int j = 0; j < rs.rank; ++j) s += rs.cartan_adjugate[i][j] * fw[j];
    if (s % rs.cartan_det != 0) return false;
    out[i] = s / rs.cartan_det;
  }
  return true;
}

Vec dominantize(const RootSystem& rs, Vec v) {
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (v[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return v;
    Int c = v[neg];
    for (int j = 0; j < rs.rank; ++j) v[j] -= c * rs.cartan[j][neg];
  }
}

// det-scaled invariant form of two fw vectors: det * (a, b)
Int form_fw_fw_scaled(const RootSystem& rs, const Vec& a, const Vec& b) {
  Int s = 0;
  for (int i = 0; i < rs.rank; ++i) {
    Int bi = 0;
    for (int j = 0; j < rs.rank; ++j) bi += rs.cartan_adjugate[i][j] * b[j];
    s += a[i] * rs.symmetrizer[i] * bi;
  }
  return s;
}

// Freudenthal multiplicity of the dominant weight mu in V_lam (one factor);
// memo is keyed by dominant fw coordinates
Int freudenthal(const RootSystem& rs, const Vec& lam, const Vec& mu, std::map<Vec, Int>& memo) {
  if (mu == lam) return 1;
  auto it = memo.find(mu);
  if (it != memo.end()) return it->second;
  Vec diff(rs.rank);
  for (int j = 0; j < rs.rank; ++j) diff[j] = lam[j] - mu[j];
  Vec dr;
  if (!root_coords(rs, diff, dr)) return 0;
  for (Int c : dr)
    if (c < 0) return 0;
  Vec lam_rho = lam, mu_rho = mu;
  for (int j = 0; j < rs.rank; ++j) {
    lam_rho[j] += 1;
    mu_rho[j] += 1;
  }
  Int denom = form_fw_fw_scaled(rs, lam_rho, lam_rho) - form_fw_fw_scaled(rs, mu_rho, mu_rho);
  if (denom == 0) return 0;  // only mu = lam sits on the shell
  Int num = 0;
  for (const Vec& a : rs.positive_roots) {
    Vec afw = rootsys::root_to_fw(rs, a);
    Vec cur = mu;       // mu + j*alpha in fw coordinates
    Vec remain = dr;    // root coords of lam - (mu + j*alpha)
    for (;;) {
      bool inside = true;
      for (int j = 0; j < rs.rank; ++j) {
        remain[j] -= a[j];
        if (remain[j] < 0) inside = false;
      }
      if (!inside) break;
      for (int j = 0; j < rs.rank; ++j) cur[j] += afw[j];
      Int m = freudenthal(rs, lam, dominantize(rs, cur), memo);
      if (m != 0) num += m * rootsys::form_fw_root(rs, cur, a);
    }
  }
  num *= 2 * rs.cartan_det;
  if (num % denom != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
  Int result = num / denom;
  memo[mu] = result;
  return result;
}

// every weight of V_lam with multiplicity, one factor
std::map<Vec, Int> factor_weight_system(const RootSystem& rs, const Vec& lam) {
  // saturation: nu lies in the system iff lam - dom(nu) is a nonnegative
  // integral root combination
  auto member = [&](const Vec& v) {
    Vec dom = dominantize(rs, v);
    Vec diff(rs.rank);
    for (int j = 0; j < rs.rank; ++j) diff[j] = lam[j] - dom[j];
    Vec dr;
    if (!root_coords(rs, diff, dr)) return false;
    for (Int c : dr)
      if (c < 0) return false;
    return true;
  };
  std::set<Vec> seen{lam};
  std::vector<Vec> queue{lam};
  for (size_t k = 0; k < queue.size(); ++k) {
    Vec cur = queue[k];
    for (int i = 0; i < rs.rank; ++i) {
      Vec cand = cur;
      for (int j = 0; j < rs.rank; ++j) cand[j] -= rs.cartan[j][i];
      if (!seen.count(cand) && member(cand)) {
        seen.insert(cand);
        queue.push_back(cand);
      }
    }
  }
  std::map<Vec, Int> memo;
  std::map<Vec, Int> out;
  for (const Vec& v : seen) {
    Int m = freudenthal(rs, lam, dominantize(rs, v), memo);
    if (m <= 0) throw std::logic_error("factor_weight_system: saturation produced a non-weight");
    out[v] = m;
  }
  return out;
}

void check_label(const Algebra& alg, const IrrepLabel& hw, const char* who) {
  if ((int)hw.coords.size() != alg.rank)
    throw std::invalid_argument(std::string(who) + ": label rank mismatch");
  if (!is_dominant(hw))
    throw std::invalid_argument(std::string(who) + ": label not dominant " + rootsys::to_string(hw));
}

// reflect the fw vector at global node i (0-based), in place
void reflect_global(const Algebra& alg, int i, Vec& v) {
  for (size_t f = 0; f < alg.factors.size(); ++f) {
    const RootSystem& rs = alg.factors[f];
    int off = alg.offset[f];
    if (i < off || i >= off + rs.rank) continue;
    int li = i - off;
    Int c = v[i];
    for (int j = 0; j < rs.rank; ++j) v[off + j] -= c * rs.cartan[j][li];
    return;
  }
  throw std::logic_error("reflect_global: node out of range");
}

}  // namespace

Algebra make_algebra(std::vector<rootsys::RootSystem> factors) {
  Algebra alg;
  alg.factors = std::move(factors);
  int off = 0;
  for (const auto& rs : alg.factors) {
    alg.offset.push_back(off);
    off += rs.rank;
  }
  alg.rank = off;
  return alg;
}

bool is_dominant(const Weight& w) {
  for (Int c : w.coords)
    if (c < 0) return false;
  return true;
}

BigInt weyl_dimension(const Algebra& alg, const IrrepLabel& hw) {
  check_label(alg, hw, "weyl_dimension");
  BigInt num = 1, den = 1;
  for (size_t f = 0; f < alg.factors.size(); ++f) {
    const RootSystem& rs = alg.factors[f];
    Vec part = slice(hw.coords, alg.offset[f], rs.rank);
    for (const Vec& a : rs.positive_roots) {
      Int top = 0, bot = 0;
      for (int j = 0; j < rs.rank; ++j) {
        top += (part[j] + 1) * rs.symmetrizer[j] * a[j];
        bot += rs.symmetrizer[j] * a[j];
      }
      num *= top;
      den *= bot;
    }
  }
  if (num % den != 0) throw std::logic_error("weyl_dimension: non-integral result");
  return num / den;
}

BigInt decomposition_dimension(const Algebra& alg, const Decomposition& dec) {
  BigInt total = 0;
  for (const auto& [hw, m] : dec) total += m * weyl_dimension(alg, hw);
  return total;
}

BigInt total_mass(const WeightMultiset& ws) {
  BigInt total = 0;
  for (const auto& [w, m] : ws.entries) total += m;
  return total;
}

WeightMultiset weight_system(const Algebra& alg, const IrrepLabel& hw) {
  check_label(alg, hw, "weight_system");
  // cartesian product of the factor systems, charge carried unchanged
  std::vector<std::pair<Vec, Int>> acc{{Vec{}, 1}};
  for (size_t f = 0; f < alg.factors.size(); ++f) {
    const RootSystem& rs = alg.factors[f];
    auto part = factor_weight_system(rs, slice(hw.coords, alg.offset[f], rs.rank));
    std::vector<std::pair<Vec, Int>> next;
    next.reserve(acc.size() * part.size());
    for (const auto& [prefix, m1] : acc)
      for (const auto& [v, m2] : part) {
        Vec joined = prefix;
        joined.insert(joined.end(), v.begin(), v.end());
        next.emplace_back(std::move(joined), m1 * m2);
      }
    acc = std::move(next);
  }
  WeightMultiset out;
  for (auto& [v, m] : acc) out.entries[Weight{std::move(v), hw.charge}] = m;
  return out;
}

WeightMultiset weight_system(const Algebra& alg, const Decomposition& dec) {
  WeightMultiset out;
  for (const auto& [hw, m] : dec) {
    auto sys = weight_system(alg, hw);
    for (const auto& [w, m2] : sys.entries) {
      Int& slot = out.entries[w];
      slot += m * m2;
      if (slot == 0) out.entries.erase(w);
    }
  }
  return out;
}

boost::rational<Int> weight_height(const Algebra& alg, const Weight& w) {
  boost::rational<Int> h(0);
  for (size_t f = 0; f < alg.factors.size(); ++f) {
    const RootSystem& rs = alg.factors[f];
    Int num = 0;
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) num += rs.cartan_adjugate[i][j] * w.coords[alg.offset[f] + j];
    h += boost::rational<Int>(num, rs.cartan_det);
  }
  return h;
}

Weight make_dominant(const Algebra& alg, const Weight& w) {
  Weight out = w;
  for (size_t f = 0; f < alg.factors.size(); ++f) {
    const RootSystem& rs = alg.factors[f];
    Vec part = dominantize(rs, slice(out.coords, alg.offset[f], rs.rank));
    std::copy(part.begin(), part.end(), out.coords.begin() + alg.offset[f]);
  }
  return out;
}

std::vector<Weight> weyl_orbit(const Algebra& alg, const Weight& w) {
  std::set<Vec> seen{w.coords};
  std::vector<Vec> queue{w.coords};
  for (size_t k = 0; k < queue.size(); ++k) {
    for (int i = 0; i < alg.rank; ++i) {
      Vec img = queue[k];
      reflect_global(alg, i, img);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  std::vector<Weight> out;
  out.reserve(seen.size());
  for (const Vec& v : seen) out.push_back(Weight{v, w.charge});
  return out;
}

Decomposition decompose(const Algebra& alg, const WeightMultiset& ws) {
  auto entries = ws.entries;
  Decomposition out;
  for (;;) {
    const Weight* best = nullptr;
    boost::rational<Int> best_h(0);
    Int best_m = 0;
    for (const auto& [w, m] : entries) {
      if (m == 0 || !is_dominant(w)) continue;
      auto h = weight_height(alg, w);
      if (!best || h > best_h ||
          (h == best_h && WeightLess{}(*best, w))) {
        best = &w;
        best_h = h;
        best_m = m;
      }
    }
    if (!best) {
      for (const auto& [w, m] : entries)
        if (m != 0)
          throw std::runtime_error("decompose: not a true character (leftover weight " +
                                   rootsys::to_string(w) + " with multiplicity " +
                                   std::to_string(m) + ")");
      break;
    }
    if (best_m < 0)
      throw std::runtime_error("decompose: not a true character (multiplicity " +
                               std::to_string(best_m) + " at dominant weight " +
                               rootsys::to_string(*best) + ")");
    Weight hw = *best;
    out[hw] += best_m;
    auto sys = weight_system(alg, hw);
    for (const auto& [w, m] : sys.entries) {
      Int& slot = entries[w];
      slot -= best_m * m;
      if (slot == 0) entries.erase(w);
    }
  }
  return out;
}

Decomposition tensor_product(const Algebra& alg, const IrrepLabel& a, const IrrepLabel& b) {
  check_label(alg, a, "tensor_product");
  check_label(alg, b, "tensor_product");
  const IrrepLabel* small = &a;
  const IrrepLabel* big = &b;
  if (weyl_dimension(alg, a) > weyl_dimension(alg, b)) std::swap(small, big);
  auto sys = weight_system(alg, *small);
  Int charge = a.charge + b.charge;
  std::map<Weight, Int, WeightLess> acc;
  for (const auto& [nu, m] : sys.entries) {
    // Klimyk: dominantize nu + big + rho with reflection signs, drop walls
    Vec t(alg.rank);
    for (int j = 0; j < alg.rank; ++j) t[j] = nu.coords[j] + big->coords[j] + 1;
    int sign = 1;
    for (;;) {
      int neg = -1;
      bool wall = false;
      for (int j = 0; j < alg.rank; ++j) {
        if (t[j] == 0) {
          wall = true;
          break;
        }
        if (t[j] < 0) {
          neg = j;
          break;
        }
      }
      if (wall) {
        sign = 0;
        break;
      }
      if (neg < 0) break;
      reflect_global(alg, neg, t);
      sign = -sign;
    }
    if (sign == 0) continue;
    for (int j = 0; j < alg.rank; ++j) t[j] -= 1;
    Weight key{std::move(t), charge};
    Int& slot = acc[key];
    slot += sign * m;
    if (slot == 0) acc.erase(key);
  }
  Decomposition out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw std::logic_error("tensor_product: negative Klimyk multiplicity");
    out[w] = m;
  }
  return out;
}

Decomposition tensor_product(const Algebra& alg, const Decomposition& a, const Decomposition& b) {
  Decomposition out;
  for (const auto& [ha, ma] : a)
    for (const auto& [hb, mb] : b) {
      auto prod = tensor_product(alg, ha, hb);
      for (const auto& [hw, m] : prod) out[hw] += ma * mb * m;
    }
  return out;
}

WeightMultiset convolve(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out;
  for (const auto& [wa, ma] : a.entries)
    for (const auto& [wb, mb] : b.entries) {
      Vec v(wa.coords.size());
      for (size_t j = 0; j < v.size(); ++j) v[j] = wa.coords[j] + wb.coords[j];
      Weight key{std::move(v), wa.charge + wb.charge};
      Int& slot = out.entries[key];
      slot += ma * mb;
      if (slot == 0) out.entries.erase(key);
    }
  return out;
}

WeightMultiset multiset_sum(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out = a;
  for (const auto& [w, m] : b.entries) {
    Int& slot = out.entries[w];
    slot += m;
    if (slot == 0) out.entries.erase(w);
  }
  return out;
}

WeightMultiset adams(const WeightMultiset& ws, Int i) {
  WeightMultiset out;
  for (const auto& [w, m] : ws.entries) {
    Vec v = w.coords;
    for (auto& x : v) x *= i;
    out.entries[Weight{std::move(v), w.charge * i}] += m;
  }
  return out;
}

namespace {

WeightMultiset newton_power(const WeightMultiset& ws, int k, bool alternating) {
  if (k < 0) throw std::invalid_argument("newton_power: negative degree");
  size_t len = ws.entries.empty() ? 0 : ws.entries.begin()->first.coords.size();
  std::vector<WeightMultiset> h(k + 1);
  h[0].entries[Weight{Vec(len, 0), 0}] = 1;
  std::vector<WeightMultiset> p(k + 1);
  for (int i = 1; i <= k; ++i) p[i] = adams(ws, i);
  for (int m = 1; m <= k; ++m) {
    WeightMultiset acc;
    for (int i = 1; i <= m; ++i) {
      Int sgn = (!alternating || i % 2 == 1) ? 1 : -1;
      for (const auto& [wp, mp] : p[i].entries)
        for (const auto& [wh, mh] : h[m - i].entries) {
          Vec v(wp.coords.size());
          for (size_t j = 0; j < v.size(); ++j) v[j] = wp.coords[j] + wh.coords[j];
          Weight key{std::move(v), wp.charge + wh.charge};
          Int& slot = acc.entries[key];
          slot += sgn * mp * mh;
          if (slot == 0) acc.entries.erase(key);
        }
    }
    for (auto& [w, v] : acc.entries) {
      if (v % m != 0) throw std::logic_error("newton_power: non-integral plethysm coefficient");
      v /= m;
    }
    h[m] = std::move(acc);
  }
  return h[k];
}

}  // namespace

WeightMultiset symmetric_power(const WeightMultiset& ws, int k) {
  return newton_power(ws, k, false);
}

WeightMultiset exterior_power(const WeightMultiset& ws, int k) {
  return newton_power(ws, k, true);
}

std::string to_string(const Decomposition& dec) {
  if (dec.empty()) return "0";
  std::string s;
  for (const auto& [hw, m] : dec) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "*";
    s += rootsys::to_string(hw);
  }
  return s;
}

}  // namespace repchar
