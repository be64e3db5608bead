#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace rootsys {

using Int = long long;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;
using Rat = boost::rational<Int>;

enum class Family { A, B, C, D, E6, E7 };

std::string family_name(Family f);

// A weight in fundamental-weight coordinates plus the central u(1) charge.
// The charge rides along unchanged through all root-system arithmetic; only
// the character calculus (tensor, plethysm) mixes it.
struct Weight {
  Vec coords;
  Int charge = 0;
  friend bool operator==(const Weight&, const Weight&) = default;
};

// total order on (charge, coords), used for every map and report
struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const {
    if (a.charge != b.charge) return a.charge < b.charge;
    return a.coords < b.coords;
  }
};

std::string to_string(const Weight& w);
std::string to_string(const Vec& v);

struct RootSystem {
  Family family = Family::A;
  int rank = 0;
  // cartan[i][j] = <alpha_j, alpha_i^vee>, so column j holds the
  // fundamental-weight coordinates of alpha_j
  Mat cartan;
  // d_i with d_i * cartan[i][j] symmetric; the invariant form is
  // (alpha_i, alpha_j) = d_i * cartan[i][j], so (alpha_i, alpha_i) = 2 d_i
  Vec symmetrizer;
  std::vector<Vec> positive_roots;  // simple-root coordinates, by increasing height
  Vec highest_root;
  // adjugate and determinant of the Cartan matrix, for exact inversion
  Mat cartan_adjugate;
  Int cartan_det = 0;
};

RootSystem build_root_system(Family family, int rank);

Int height(const Vec& root);

// fundamental-weight coordinates of a vector given in simple-root coordinates
Vec root_to_fw(const RootSystem& rs, const Vec& root);

// (beta, alpha) with beta in fw coordinates and alpha in root coordinates
Int form_fw_root(const RootSystem& rs, const Vec& fw, const Vec& root);

// (a, b) with both arguments in root coordinates
Int form_root_root(const RootSystem& rs, const Vec& a, const Vec& b);

// membership test against positive_roots (either sign)
bool is_root(const RootSystem& rs, const Vec& v);

// beta(H_alpha) = 2 (beta, alpha) / (alpha, alpha); alpha must be nonzero
Rat coroot_pairing(const RootSystem& rs, const Weight& beta, const Vec& alpha);

// s_i acting on a weight (i is 1-based)
Weight simple_reflection(const RootSystem& rs, int i, const Weight& beta);

// s_i acting on a vector in simple-root coordinates
Vec reflect_root(const RootSystem& rs, int i, const Vec& root);

// full Weyl orbit by closure under simple reflections, sorted
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& beta);

// Greedy cascade of strongly orthogonal noncompact positive roots for the
// parabolic marked at special_node (1-based).  Each chosen root has
// coefficient 1 at the node; candidates are taken by maximal height, ties
// by lexicographically largest coordinates.
std::vector<Vec> strongly_orthogonal_cascade(const RootSystem& rs, int special_node);

}  // namespace rootsys
