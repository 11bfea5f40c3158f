#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absord/polynomial.hpp"

namespace absord {

// Finite poset presented by its cover relations; ranks increase by exactly one
// along covers. Orders built from a group action have a unique rank-0 element
// (the base point); induced subposets may have several minimal elements.
struct RankedPoset {
  std::vector<std::string> labels;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> covers;  // (lower, upper), sorted

  int size() const { return static_cast<int>(labels.size()); }
  std::vector<std::vector<int>> upper_adjacency() const;
  std::vector<std::vector<int>> lower_adjacency() const;
  std::vector<int> maximal_elements() const;
  int minimum() const;  // unique rank-0 element; throws when not unique
};

// A transitive action presented as an explicit graph move table: point 0 is
// the base, gen_images[g][p] is the image of point p under generator g.
struct ActionSpace {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> gen_images;
  int base = 0;
};

// Geodesic order from the base over the union graph of all generator moves:
// rank = graph distance, covers = edges between consecutive ranks.
RankedPoset build_absolute_order(const ActionSpace& space);

// Same construction for a plain undirected graph given by adjacency lists.
RankedPoset poset_from_graph(const std::vector<std::vector<int>>& adj, int base,
                             std::vector<std::string> labels);

IntPolynomial rank_polynomial(const RankedPoset& p);

struct GradedInfo {
  bool graded = false;  // all maximal elements share the top rank
  int top_rank = 0;
};
GradedInfo graded_info(const RankedPoset& p);
bool is_graded(const RankedPoset& p);

// Number of saturated chains from the minimum to a maximal element.
long long count_maximal_chains(const RankedPoset& p);

// Rank-respecting poset isomorphism (backtracking over refined classes).
bool are_isomorphic(const RankedPoset& p, const RankedPoset& q);

// Closed walks of the given length in the undirected cover graph, an
// isomorphism invariant that can separate posets sharing rank and degree
// data. Counts grow like (max degree)^length; keep length small.
long long closed_walk_count(const RankedPoset& p, int length);

// Does the explicit bijection map (p index -> q index) carry covers of p
// exactly onto covers of q?
bool is_order_isomorphism(const RankedPoset& p, const RankedPoset& q, const std::vector<int>& map);

// Reachability index: leq(a, b) iff a <= b in the cover order.
class UpSets {
 public:
  explicit UpSets(const RankedPoset& p);
  bool leq(int a, int b) const;

 private:
  int n_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> bits_;
};

// Closed interval [lo, hi] as a poset, ranks shifted to start at 0.
RankedPoset interval(const RankedPoset& p, int lo, int hi);

// Is the subset (given as a membership mask) downward closed?
bool is_order_ideal(const RankedPoset& p, const std::vector<char>& member);

}  // namespace absord
