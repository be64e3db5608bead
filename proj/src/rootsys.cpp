#include "rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rootsys {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  throw std::logic_error("family_name: bad enum value");
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string to_string(const Weight& w) {
  return to_string(w.coords) + "@" + std::to_string(w.charge);
}

namespace {

Mat chain_cartan(int l) {
  Mat c(l, Vec(l, 0));
  for (int i = 0; i < l; ++i) {
    c[i][i] = 2;
    if (i + 1 < l) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

// cartan[i][j] = <alpha_j, alpha_i^vee>; the asymmetric entries below follow
// from the short/long assignments in the Bourbaki numbering
void fill_B(int l, Mat& c, Vec& d) {
  c = chain_cartan(l);
  c[l - 1][l - 2] = -2;  // alpha_l is the short root
  d.assign(l, 2);
  d[l - 1] = 1;
}

void fill_C(int l, Mat& c, Vec& d) {
  c = chain_cartan(l);
  c[l - 2][l - 1] = -2;  // alpha_l is the long root
  d.assign(l, 1);
  d[l - 1] = 2;
}

void fill_D(int l, Mat& c, Vec& d) {
  c = chain_cartan(l);
  c[l - 1][l - 2] = c[l - 2][l - 1] = 0;
  c[l - 1][l - 3] = c[l - 3][l - 1] = -1;  // fork at node l-2
  d.assign(l, 1);
}

void fill_E(int l, Mat& c, Vec& d) {
  // chain 1-3-4-5-6(-7) with node 2 attached to node 4
  c.assign(l, Vec(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto edge = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
  edge(1, 3);
  edge(3, 4);
  edge(4, 5);
  edge(5, 6);
  edge(2, 4);
  if (l == 7) edge(6, 7);
  d.assign(l, 1);
}

Int det_of(const Mat& m) {
  int n = (int)m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int sum = 0;
  for (int j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Mat minor(n - 1, Vec(n - 1));
    for (int r = 1; r < n; ++r)
      for (int s = 0, t = 0; s < n; ++s)
        if (s != j) minor[r - 1][t++] = m[r][s];
    Int term = m[0][j] * det_of(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

Mat adjugate_of(const Mat& m) {
  int n = (int)m.size();
  Mat adj(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat minor(n - 1, Vec(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int s = 0, ss = 0; s < n; ++s)
          if (s != i) minor[rr][ss++] = m[r][s];
        ++rr;
      }
      Int cof = det_of(minor);
      adj[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

// closure of the simple roots under root-string extension, layered by height
std::vector<Vec> generate_positive_roots(const Mat& cartan) {
  int l = (int)cartan.size();
  std::set<Vec> known;
  std::vector<Vec> layer;
  std::vector<Vec> out;
  for (int i = 0; i < l; ++i) {
    Vec e(l, 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Vec> next;
    for (const Vec& a : layer) {
      for (int i = 0; i < l; ++i) {
        // alpha + alpha_i is a root iff q = p - <alpha, alpha_i^vee> >= 1,
        // where p counts how far the string continues below alpha
        Int c = 0;
        for (int j = 0; j < l; ++j) c += cartan[i][j] * a[j];
        Int p = 0;
        Vec down = a;
        for (;;) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - c >= 1) {
          Vec up = a;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  auto need = [&](bool ok, const char* what) {
    if (!ok)
      throw std::invalid_argument("build_root_system: rank " + std::to_string(rank) +
                                  " out of range for family " + what);
  };
  switch (family) {
    case Family::A:
      need(rank >= 1 && rank <= 12, "A");
      rs.cartan = chain_cartan(rank);
      rs.symmetrizer.assign(rank, 1);
      break;
    case Family::B:
      need(rank >= 2 && rank <= 12, "B");
      fill_B(rank, rs.cartan, rs.symmetrizer);
      break;
    case Family::C:
      need(rank >= 2 && rank <= 12, "C");
      fill_C(rank, rs.cartan, rs.symmetrizer);
      break;
    case Family::D:
      need(rank >= 3 && rank <= 12, "D");
      fill_D(rank, rs.cartan, rs.symmetrizer);
      break;
    case Family::E6:
      need(rank == 6, "E6");
      fill_E(6, rs.cartan, rs.symmetrizer);
      break;
    case Family::E7:
      need(rank == 7, "E7");
      fill_E(7, rs.cartan, rs.symmetrizer);
      break;
  }
  rs.positive_roots = generate_positive_roots(rs.cartan);
  rs.highest_root = rs.positive_roots.back();
  // the top height layer must be a single root
  if (rs.positive_roots.size() >= 2) {
    const Vec& prev = rs.positive_roots[rs.positive_roots.size() - 2];
    if (height(prev) == height(rs.highest_root))
      throw std::logic_error("build_root_system: highest root is not unique");
  }
  rs.cartan_adjugate = adjugate_of(rs.cartan);
  rs.cartan_det = det_of(rs.cartan);
  if (rs.cartan_det <= 0) throw std::logic_error("build_root_system: Cartan determinant <= 0");
  return rs;
}

Int height(const Vec& root) {
  Int h = 0;
  for (Int r : root) h += r;
  return h;
}

Vec root_to_fw(const RootSystem& rs, const Vec& root) {
  Vec fw(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) fw[i] += rs.cartan[i][j] * root[j];
  return fw;
}

Int form_fw_root(const RootSystem& rs, const Vec& fw, const Vec& root) {
  // (omega_i, alpha_j) = d_j delta_ij, so the form is a weighted dot product
  Int s = 0;
  for (int j = 0; j < rs.rank; ++j) s += fw[j] * rs.symmetrizer[j] * root[j];
  return s;
}

Int form_root_root(const RootSystem& rs, const Vec& a, const Vec& b) {
  return form_fw_root(rs, root_to_fw(rs, a), b);
}

bool is_root(const RootSystem& rs, const Vec& v) {
  Vec neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  for (const Vec& r : rs.positive_roots)
    if (r == v || r == neg) return true;
  return false;
}

Rat coroot_pairing(const RootSystem& rs, const Weight& beta, const Vec& alpha) {
  Int nn = form_root_root(rs, alpha, alpha);
  if (nn == 0) throw std::invalid_argument("coroot_pairing: alpha has zero norm");
  return Rat(2 * form_fw_root(rs, beta.coords, alpha), nn);
}

Weight simple_reflection(const RootSystem& rs, int i, const Weight& beta) {
  if (i < 1 || i > rs.rank) throw std::invalid_argument("simple_reflection: node out of range");
  Weight out = beta;
  Int c = beta.coords[i - 1];
  for (int j = 0; j < rs.rank; ++j) out.coords[j] -= c * rs.cartan[j][i - 1];
  return out;
}

Vec reflect_root(const RootSystem& rs, int i, const Vec& root) {
  if (i < 1 || i > rs.rank) throw std::invalid_argument("reflect_root: node out of range");
  Int c = 0;
  for (int j = 0; j < rs.rank; ++j) c += rs.cartan[i - 1][j] * root[j];
  Vec out = root;
  out[i - 1] -= c;
  return out;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& beta) {
  std::set<Vec> seen{beta.coords};
  std::vector<Vec> queue{beta.coords};
  for (size_t k = 0; k < queue.size(); ++k) {
    Vec cur = queue[k];
    for (int i = 0; i < rs.rank; ++i) {
      Int c = cur[i];
      if (c == 0) continue;
      Vec img = cur;
      for (int j = 0; j < rs.rank; ++j) img[j] -= c * rs.cartan[j][i];
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  std::vector<Weight> out;
  out.reserve(seen.size());
  for (const Vec& v : seen) out.push_back(Weight{v, beta.charge});
  return out;
}

std::vector<Vec> strongly_orthogonal_cascade(const RootSystem& rs, int special_node) {
  if (special_node < 1 || special_node > rs.rank)
    throw std::invalid_argument("strongly_orthogonal_cascade: node out of range");
  if (rs.highest_root[special_node - 1] != 1)
    throw std::invalid_argument(
        "strongly_orthogonal_cascade: node " + std::to_string(special_node) +
        " is not special (highest root coefficient != 1)");
  std::vector<Vec> candidates;
  for (const Vec& r : rs.positive_roots)
    if (r[special_node - 1] == 1) candidates.push_back(r);
  std::sort(candidates.begin(), candidates.end(), [](const Vec& a, const Vec& b) {
    Int ha = height(a), hb = height(b);
    if (ha != hb) return ha > hb;
    return a > b;
  });
  std::vector<Vec> chosen;
  for (const Vec& cand : candidates) {
    bool ok = true;
    for (const Vec& c : chosen) {
      Vec sum(cand.size()), diff(cand.size());
      for (size_t t = 0; t < cand.size(); ++t) {
        sum[t] = cand[t] + c[t];
        diff[t] = cand[t] - c[t];
      }
      if (is_root(rs, sum) || is_root(rs, diff)) {
        ok = false;
        break;
      }
    }
    if (ok) chosen.push_back(cand);
  }
  return chosen;
}

}  // namespace rootsys
