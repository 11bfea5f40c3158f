#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "absord/group.hpp"
#include "absord/polynomial.hpp"
#include "absord/poset.hpp"
#include "absord/rootspace.hpp"

namespace absord {

// A group together with a generating set of reflections and the induced
// length function.  Members are indices into the parent universe, so the
// same machinery serves the full group and any of its subgroups.
struct GroupContext {
  const GroupUniverse* U = nullptr;
  std::vector<int> members;      // sorted, identity first
  std::vector<int> reflections;  // parent indices
  std::vector<int> lengths;      // aligned with members, graph distance
  std::unordered_map<int, int> local;

  int local_index(int parent) const;
  int length_of(int parent) const { return lengths[local_index(parent)]; }
};

GroupContext full_context(const GroupUniverse& U);
GroupContext sub_context(const GroupUniverse& U, std::vector<int> members,
                         std::vector<int> reflections);

// u <= w in the absolute order of the context's group
bool absolute_leq(const GroupContext& G, int u, int w);

// left cosets wH as sorted index lists; the coset of the identity first,
// the rest ordered by smallest member
std::vector<std::vector<int>> enumerate_cosets(const GroupContext& G,
                                               const std::vector<int>& subgroup);

// elements of smallest reflection length within the coset
std::vector<int> coset_min_length_elements(const GroupContext& G,
                                           const std::vector<int>& coset);

// the absolute-order minimum of the coset, when one exists
std::optional<int> coset_minimum(const GroupContext& G, const std::vector<int>& coset);

struct ModularityReport {
  bool modular = false;
  std::vector<std::vector<int>> cosets;
  std::vector<std::optional<int>> minima;         // per coset
  std::vector<std::vector<int>> min_length_reps;  // per coset
  std::optional<int> witness_coset;               // first coset without a minimum
  IntPolynomial group_poly;                       // sum of q^len over the group
  IntPolynomial subgroup_poly;                    // sum over H, ambient lengths
  IntPolynomial quotient_poly;                    // sum of q^(min coset length)
  bool factorization_holds = false;               // group == subgroup * quotient
};

ModularityReport check_modular(const GroupContext& G, const std::vector<int>& subgroup);

struct QuasiModularityReport {
  bool quasi_modular = false;
  IntPolynomial group_poly;
  IntPolynomial subgroup_own_poly;  // lengths inside H over its own reflections
  IntPolynomial quotient_poly;
};

// own_reflections generate the subgroup and play the role of its reflection
// set, which need not sit inside the ambient reflections
QuasiModularityReport check_quasi_modular(const GroupContext& G,
                                          const std::vector<int>& subgroup,
                                          const std::vector<int>& own_reflections);

// w -> minimum of wH, aligned with G.members; requires a modular report
std::vector<int> minimum_section(const GroupContext& G, const ModularityReport& report);

// the coset minima of a modular subgroup form an order ideal of the group order
bool minima_form_ideal(const GroupContext& G, const ModularityReport& report);

// absolute order on the whole group, base = identity
RankedPoset group_poset(const GroupUniverse& U);

struct CosetPoset {
  std::vector<std::vector<int>> cosets;
  RankedPoset poset;  // labels name a distinguished representative
};

// absolute order on the coset space W/H under left multiplication
CosetPoset coset_poset(const GroupUniverse& U, const std::vector<int>& subgroup);

// induced subposet on a subset of elements; ranks shifted so the lowest is 0
RankedPoset induced_subposet(const RankedPoset& p, const std::vector<int>& members);

// span of the moved spaces of all members
Flat subgroup_moved_span(const GroupUniverse& U, const std::vector<int>& members);

}  // namespace absord
