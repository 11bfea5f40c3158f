#pragma once

#include <utility>
#include <vector>

#include "absord/group.hpp"
#include "absord/poset.hpp"

namespace absord {

struct TupleSpace {
  std::vector<std::vector<int>> points;  // tuples of distinct letters, 1-based
  RankedPoset poset;
  std::vector<int> stabilizer;  // universe indices fixing the base tuple
};

// order on k-tuples of pairwise distinct letters from {1..n} under the
// symmetric group, based at (n-k+1, ..., n)
TupleSpace tuple_poset(const GroupUniverse& sym, int k);

struct ColoredTupleSpace {
  std::vector<std::vector<std::pair<int, int>>> points;  // (color, letter)
  RankedPoset poset;
  std::vector<int> stabilizer;
};

// colored variant under the wreath product: letters stay pairwise distinct,
// colors live in Z_r, the base tuple is ((0, n-k+1), ..., (0, n))
ColoredTupleSpace colored_tuple_poset(const GroupUniverse& wreath, int k);

// k! times the sum over trees on nodes {v_0,...,v_k} of (n-k)^deg(v_0),
// by direct enumeration of the trees
long long tree_chain_formula(int n, int k);

// (n-2)! times the sum over trees on nodes {v_0,...,v_{n-2}} of 2^deg(v_0)
long long alternating_chain_formula(int n);

}  // namespace absord
