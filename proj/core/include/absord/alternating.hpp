#pragma once

#include <vector>

#include "absord/cosets.hpp"
#include "absord/group.hpp"
#include "absord/polynomial.hpp"
#include "absord/poset.hpp"

namespace absord {

// Even-length elements of a reflection group, ordered through a chosen
// reflection s0: the generating set consists of the products s0*t over all
// reflections t, and ranks are word lengths over that set.
struct AlternatingContext {
  const GroupUniverse* U = nullptr;
  int s0 = -1;
  std::vector<int> members;  // universe indices with even length, sorted
  std::vector<int> local;    // universe index -> local index, or -1
  std::vector<int> twisted;  // universe indices of s0*t, identity included
  std::vector<int> lengths;  // aligned with members
};

AlternatingContext make_alternating(const GroupUniverse& U, int s0);

// covers are left multiplications by twisted generators raising the rank by one
RankedPoset alternating_poset(const AlternatingContext& A);

IntPolynomial alternating_rank_poly(const AlternatingContext& A);

// Parity dichotomies relating the twisted length to the plain one:
//   twisted even  <=>  len(w) < len(s0 w)  <=>  len(w) < len(w s0),
//   twisted = plain when even and plain - 1 when odd,
//   twisted = min(len(w), len(w s0)).
bool length_dichotomies_hold(const AlternatingContext& A);

// w -> the coset of w when the twisted length is even, of s0 w s0 otherwise;
// an index map onto the coset poset of the two-element subgroup {e, s0}
std::vector<int> fold_map(const AlternatingContext& A, const CosetPoset& halves);

// elements whose length rises when multiplied by s0 on the right
std::vector<int> ascent_set(const GroupUniverse& U, int s0);

// sorted universe indices of the products s0*t (the identity included)
std::vector<int> twisted_reflection_set(const GroupUniverse& U, int s0);

// Values of odd palindromic words a_1..a_h c a_h..a_1 over the generators
// s0*s and their inverses, for all half lengths up to max_half, as sorted
// universe indices.
std::vector<int> odd_palindromes(const GroupUniverse& U, int s0, int max_half);

}  // namespace absord
