#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>
#include <vector>

// Concrete matrix model for the weight-p Hodge structure on W = wedge^p of
// C^{p+q}: basis vectors are p-element index subsets, graded by how many
// indices fall in the q-block, and a tangent matrix v acts as the derivation
// extension theta_v replacing one p-block index by a q-block one.
namespace higgs {

using BigInt = boost::multiprecision::cpp_int;
using Scalar = boost::rational<BigInt>;
using Matrix = std::vector<std::vector<Scalar>>;

struct WedgeModel {
  int p = 0;
  int q = 0;
  // graded_basis[i] lists the p-subsets of {0,..,p+q-1} with exactly i
  // members >= p, each subset ascending, subsets in lexicographic order
  std::vector<std::vector<std::vector<int>>> graded_basis;
  std::vector<long long> level_dims;

  long long total_dim() const;
};

// guard: binomial(p+q, p) <= 10^4
WedgeModel build_model(int p, int q);

// q x p exact rational matrix, a map from the p-block to the q-block
struct TangentMatrix {
  int rows = 0;  // q
  int cols = 0;  // p
  std::vector<std::vector<Scalar>> entries;
};

TangentMatrix zero_matrix(int q, int p);
TangentMatrix matrix_of(const std::vector<std::vector<long long>>& rows);

// maps[i] sends level i to level i+1; entries linear in v, signs by
// transposition count against the lexicographic basis order
std::vector<Matrix> theta_matrix(const WedgeModel& model, const TangentMatrix& v);

// exact rank by fraction-free Gaussian elimination
long long matrix_rank(Matrix m);

// plain rank of the tangent matrix itself
long long tangent_rank(const TangentMatrix& v);

// image of the level-0 generator under theta_v^k, as coordinates in level k;
// all zero once k exceeds min(p,q)
std::vector<Scalar> bottom_image(const WedgeModel& model, const TangentMatrix& v, int k);

// rank of theta_v^k restricted to level 0; 0 or 1 since the source is a line
long long iterated_rank(const WedgeModel& model, const TangentMatrix& v, int k);

// v^k lies in the degree-k graded ideal iff the iterated Higgs map kills the
// bottom line
bool membership_in_Ik(const WedgeModel& model, const TangentMatrix& v, int k);

}  // namespace higgs
