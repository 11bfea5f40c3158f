#include <algorithm>
#include <vector>

#include "doctest.h"

#include "absord/cosets.hpp"
#include "absord/coxeter.hpp"
#include "absord/group.hpp"
#include "absord/poset.hpp"

using namespace absord;

namespace {

// 0 < 1, 0 < 2, 1 < 3, 2 < 3
RankedPoset diamond() {
  RankedPoset p;
  p.labels = {"bot", "l", "r", "top"};
  p.ranks = {0, 1, 1, 2};
  p.covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return p;
}

// 0 < 1 < 2 with a pendant 0 < 3; same rank polynomial as the diamond
RankedPoset bent() {
  RankedPoset p;
  p.labels = {"bot", "mid", "top", "leaf"};
  p.ranks = {0, 1, 2, 1};
  p.covers = {{0, 1}, {0, 3}, {1, 2}};
  return p;
}

}  // namespace

TEST_CASE("poset from graph") {
  // triangle: geodesic order from vertex 0
  RankedPoset p = poset_from_graph({{1, 2}, {0, 2}, {0, 1}}, 0, {"a", "b", "c"});
  CHECK(p.ranks == std::vector<int>{0, 1, 1});
  CHECK(p.covers == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(p.minimum() == 0);
  CHECK(p.maximal_elements() == std::vector<int>{1, 2});
}

TEST_CASE("absolute order from explicit action") {
  // two commuting swaps acting on four points arranged in a square
  ActionSpace space;
  space.labels = {"00", "10", "01", "11"};
  space.gen_images = {{1, 0, 3, 2}, {2, 3, 0, 1}};
  RankedPoset p = build_absolute_order(space);
  CHECK(p.ranks == std::vector<int>{0, 1, 1, 2});
  CHECK(p.covers == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(rank_polynomial(p) == IntPolynomial({1, 2, 1}));
}

TEST_CASE("rank polynomial and gradedness") {
  CHECK(rank_polynomial(diamond()) == IntPolynomial({1, 2, 1}));
  CHECK(rank_polynomial(bent()) == IntPolynomial({1, 2, 1}));
  CHECK(is_graded(diamond()));
  CHECK(!is_graded(bent()));
  auto info = graded_info(bent());
  CHECK(info.top_rank == 2);
  CHECK(!info.graded);
}

TEST_CASE("maximal chain counts") {
  CHECK(count_maximal_chains(diamond()) == 2);
  CHECK(count_maximal_chains(bent()) == 2);
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(3));
  CHECK(count_maximal_chains(group_poset(U)) == 6);
}

TEST_CASE("isomorphism testing") {
  RankedPoset d = diamond();
  RankedPoset shuffled;
  shuffled.labels = {"t", "r", "b", "l"};
  shuffled.ranks = {2, 1, 0, 1};
  shuffled.covers = {{1, 0}, {2, 1}, {2, 3}, {3, 0}};
  std::sort(shuffled.covers.begin(), shuffled.covers.end());
  CHECK(are_isomorphic(d, shuffled));
  CHECK(!are_isomorphic(d, bent()));  // equal rank polynomials, different covers
}

TEST_CASE("closed walk counts") {
  RankedPoset d = diamond();
  CHECK(closed_walk_count(d, 2) == 8);   // twice the edge count
  CHECK(closed_walk_count(d, 3) == 0);   // the cover graph is bipartite
  CHECK(closed_walk_count(d, 4) == 32);  // 4-cycle spectral count
  CHECK(closed_walk_count(bent(), 2) == 6);
}

TEST_CASE("explicit order isomorphism check") {
  RankedPoset d = diamond();
  CHECK(is_order_isomorphism(d, d, {0, 1, 2, 3}));
  CHECK(is_order_isomorphism(d, d, {0, 2, 1, 3}));  // swap the middles
  CHECK(!is_order_isomorphism(d, bent(), {0, 1, 2, 3}));
}

TEST_CASE("reachability against a direct transitive closure") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::B(2));
  RankedPoset p = group_poset(U);
  UpSets up(p);
  auto adj = p.upper_adjacency();
  std::vector<std::vector<char>> reach(p.size(), std::vector<char>(p.size(), 0));
  for (int s = 0; s < p.size(); ++s) {
    std::vector<int> stack{s};
    reach[s][s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!reach[s][w]) {
          reach[s][w] = 1;
          stack.push_back(w);
        }
    }
  }
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) CHECK(up.leq(a, b) == static_cast<bool>(reach[a][b]));
}

TEST_CASE("interval of a long cycle is the noncrossing partition order") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  RankedPoset p = group_poset(U);
  int hi = U.id(parse_element(U.desc, "(1 2 3 4)"));
  RankedPoset nc = interval(p, 0, hi);
  CHECK(nc.size() == 14);
  CHECK(rank_polynomial(nc) == IntPolynomial({1, 6, 6, 1}));
  CHECK(is_graded(nc));
}

TEST_CASE("order ideal membership") {
  RankedPoset d = diamond();
  CHECK(is_order_ideal(d, {1, 1, 0, 0}));
  CHECK(is_order_ideal(d, {1, 1, 1, 1}));
  CHECK(!is_order_ideal(d, {0, 1, 0, 0}));
  CHECK(!is_order_ideal(d, {1, 1, 0, 1}));
}
