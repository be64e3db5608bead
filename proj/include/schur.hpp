#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schur {

using BigInt = boost::multiprecision::cpp_int;

// weakly decreasing positive parts; the empty partition is {}
using Partition = std::vector<long long>;

bool is_partition(const Partition& p);
long long weight_of(const Partition& p);  // number of boxes
std::string to_string(const Partition& p);

Partition conjugate(const Partition& p);

// dimension of the Schur functor S_p(C^m) by hook content
BigInt schur_dimension(const Partition& p, int m);

// all partitions of k with at most max_rows rows, lexicographically decreasing
std::vector<Partition> partitions_of(int k, int max_rows);

// Pieri: mu plus a horizontal (rows) or vertical (cols) k-strip, filtered to
// at most max_rows rows after generation
std::vector<Partition> pieri_rows(const Partition& mu, int k, int max_rows);
std::vector<Partition> pieri_cols(const Partition& mu, int k, int max_rows);

// Littlewood-Richardson coefficients c^nu_{lam,mu} for all nu with at most
// max_rows rows; guarded to |lam| + |mu| <= 20
std::map<Partition, long long> lr_coefficients(const Partition& lam, const Partition& mu,
                                               int max_rows);

// Cauchy: S^k(C^p (x) C^q) runs over partitions of k with <= min(p,q) rows
std::vector<Partition> cauchy_sym(int k, int p, int q);

// plethysms of the quadratic functors: S^k(S^2) = even-row partitions of 2k,
// S^k(L^2) = even-column partitions of 2k, both cut to n rows
std::vector<Partition> sym_of_sym(int k, int n);
std::vector<Partition> sym_of_ext(int k, int n);

}  // namespace schur
