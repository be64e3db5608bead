#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rootsys.hpp"

namespace repchar {

using BigInt = boost::multiprecision::cpp_int;
using rootsys::Int;
using rootsys::Vec;
using rootsys::Weight;
using rootsys::WeightLess;

// A reductive algebra, kept as its list of simple factors.  The list may be
// empty (pure torus/center, rank 0), which the degenerate domains need.
struct Algebra {
  std::vector<rootsys::RootSystem> factors;
  std::vector<int> offset;  // starting coordinate of each factor
  int rank = 0;             // total semisimple rank
};

Algebra make_algebra(std::vector<rootsys::RootSystem> factors);

// a dominant weight with its charge, naming an irreducible
using IrrepLabel = Weight;

// multiset of weights with integer (possibly negative) multiplicities
struct WeightMultiset {
  std::map<Weight, Int, WeightLess> entries;
};

// multiplicities of irreducibles, keyed by highest weight
using Decomposition = std::map<IrrepLabel, Int, WeightLess>;

bool is_dominant(const Weight& w);

BigInt weyl_dimension(const Algebra& alg, const IrrepLabel& hw);
BigInt decomposition_dimension(const Algebra& alg, const Decomposition& dec);
BigInt total_mass(const WeightMultiset& ws);

// all weights of the irreducible with the given highest weight, with
// Freudenthal multiplicities; the charge propagates unchanged
WeightMultiset weight_system(const Algebra& alg, const IrrepLabel& hw);
WeightMultiset weight_system(const Algebra& alg, const Decomposition& dec);

// peel off highest-weight systems; throws std::runtime_error mentioning the
// offending weight when the input is not a genuine character
Decomposition decompose(const Algebra& alg, const WeightMultiset& ws);

// Klimyk tensor product; charges add
Decomposition tensor_product(const Algebra& alg, const IrrepLabel& a, const IrrepLabel& b);
Decomposition tensor_product(const Algebra& alg, const Decomposition& a, const Decomposition& b);

// pointwise character arithmetic
WeightMultiset convolve(const WeightMultiset& a, const WeightMultiset& b);
WeightMultiset multiset_sum(const WeightMultiset& a, const WeightMultiset& b);
WeightMultiset adams(const WeightMultiset& ws, Int i);

// Newton plethysms; charges scale with the degree
WeightMultiset symmetric_power(const WeightMultiset& ws, int k);
WeightMultiset exterior_power(const WeightMultiset& ws, int k);

std::vector<Weight> weyl_orbit(const Algebra& alg, const Weight& w);
Weight make_dominant(const Algebra& alg, const Weight& w);
boost::rational<Int> weight_height(const Algebra& alg, const Weight& w);

std::string to_string(const Decomposition& dec);

}  // namespace repchar
