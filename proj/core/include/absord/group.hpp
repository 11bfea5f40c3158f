#pragma once

#include <unordered_map>
#include <vector>

#include "absord/coxeter.hpp"
#include "absord/elements.hpp"

namespace absord {

// A fully enumerated finite group. Element 0 is the identity; the rest follow
// in breadth-first discovery order from the reflection generators, so indices
// are deterministic for a fixed descriptor.
struct GroupUniverse {
  CoxeterDescriptor desc;
  std::vector<GroupElement> elems;
  std::unordered_map<GroupElement, int, ElemHash> index;
  std::vector<int> lengths;      // absolute length by closed form
  std::vector<int> reflections;  // indices of the (pseudo)reflections
  ReflectionSet::Kind refl_kind = ReflectionSet::Kind::coxeter;
  // populated for small groups; mul/inv fall back to composing elements
  std::vector<int> mul_table;
  std::vector<int> inv_table;

  int size() const { return static_cast<int>(elems.size()); }
  int id(const GroupElement& w) const;  // -1 when absent
  int mul(int a, int b) const;
  int inv(int a) const;
  int conj(int g, int x) const;  // g x g^-1
};

GroupUniverse enumerate_group(const CoxeterDescriptor& desc);

// Distances from `start` under left multiplication by the given generators
// (indices); -1 marks unreachable elements.
std::vector<int> bfs_distances(const GroupUniverse& U, const std::vector<int>& gens, int start = 0);

// Independent oracle for absolute_length: breadth-first search over products
// of gens starting at the identity. `elements` is the ambient universe; a
// product outside it, or failure to reach w, raises an error.
int absolute_length_bfs(const std::vector<GroupElement>& elements, const ReflectionSet& gens,
                        const GroupElement& w);

// Subgroup generated by the given element indices, as a sorted index list.
std::vector<int> subgroup_closure(const GroupUniverse& U, const std::vector<int>& gens);

// Every subgroup of U, each a sorted index list (exhaustive; desk scale only).
std::vector<std::vector<int>> all_subgroups(const GroupUniverse& U);

// Subgroups generated by subsets of the reflection set.
std::vector<std::vector<int>> reflection_subgroups(const GroupUniverse& U);

// One representative per conjugacy class of the given subgroups.
std::vector<std::vector<int>> subgroup_conjugacy_reps(const GroupUniverse& U,
                                                      const std::vector<std::vector<int>>& subs);

// Conjugacy classes of the reflection set, each a sorted list of indices.
std::vector<std::vector<int>> reflection_conjugacy_classes(const GroupUniverse& U);

}  // namespace absord
