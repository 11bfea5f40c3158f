#include <map>
#include <set>

#include "doctest.h"

#include "absord/coxeter.hpp"
#include "absord/elements.hpp"
#include "absord/group.hpp"
#include "absord/matchings.hpp"
#include "absord/polynomial.hpp"
#include "absord/poset.hpp"

using namespace absord;

TEST_CASE("point positions and text form") {
  CHECK(Matching::pos_of(1) == 0);
  CHECK(Matching::pos_of(-1) == 1);
  CHECK(Matching::pos_of(3) == 4);
  CHECK(Matching::pos_of(-3) == 5);
  for (int p = -4; p <= 4; ++p)
    if (p != 0) CHECK(Matching::point_at(Matching::pos_of(p)) == p);

  Matching base = Matching::base(3);
  CHECK(base.str() == "{1,-1}{2,-2}{3,-3}");
  CHECK(base.image(1) == -1);
  CHECK(base.image(-2) == 2);
  CHECK(parse_matching("{1,-2}{-1,2}", 2).str() == "{1,-2}{-1,2}");
  CHECK(parse_matching("{2,-1}{-2,1}", 2) == parse_matching("{1,-2}{-1,2}", 2));
  CHECK_THROWS(parse_matching("{1,2}", 2));
  CHECK_THROWS(parse_matching("{1,1}{2,-2}", 2));
}

TEST_CASE("enumeration counts the double factorials") {
  CHECK(all_matchings(1).size() == 1);
  CHECK(all_matchings(2).size() == 3);
  CHECK(all_matchings(3).size() == 15);
  CHECK(all_matchings(4).size() == 105);
}

TEST_CASE("flips") {
  // every pair of arcs flips two ways
  for (int n : {2, 3}) {
    for (const auto& x : all_matchings(n)) {
      auto nb = flip_neighbors(x);
      CHECK(nb.size() == static_cast<std::size_t>(n * (n - 1)));
      for (const auto& y : nb) CHECK(flip_adjacent(x, y));
    }
  }
  Matching base = Matching::base(2);
  Matching other = parse_matching("{1,2}{-1,-2}", 2);
  CHECK(flip_adjacent(base, other));
  CHECK(!flip_adjacent(base, base));
}

TEST_CASE("orientation map and its inverse") {
  // the base matching carries the identity
  CHECK(matching_to_balanced(Matching::base(3)) == ColoredPerm::identity(2, 3));
  // pinned example: both letters flipped, swapped
  CHECK(matching_to_balanced(parse_matching("{1,2}{-1,-2}", 2)) ==
        ColoredPerm(2, {1, 1}, Perm({1, 0})));
  CHECK(matching_to_balanced(parse_matching("{1,-2}{-1,2}", 2)) ==
        ColoredPerm(2, {0, 0}, Perm({1, 0})));

  for (int n = 1; n <= 4; ++n) {
    for (const auto& x : all_matchings(n)) {
      ColoredPerm w = matching_to_balanced(x);
      CHECK(w.balanced());
      CHECK(balanced_to_matching(w) == x);
    }
    for (const auto& w : balanced_elements(2, n))
      CHECK(matching_to_balanced(balanced_to_matching(w)) == w);
  }
}

TEST_CASE("balanced elements and their order") {
  CHECK(balanced_elements(2, 3).size() == 15);
  CHECK(balanced_elements(3, 3).size() == 28);
  CHECK(balanced_reflections(2, 3).size() == 6);
  CHECK(balanced_reflections(3, 2).size() == 3);
  for (const auto& t : balanced_reflections(2, 3)) {
    CHECK(t.balanced());
    CHECK(balanced_length(t) == 1);
  }

  auto bp = balanced_poset(2, 3);
  CHECK(rank_polynomial(bp.poset) == IntPolynomial::from_exponents({2, 4}));
  for (std::size_t i = 0; i < bp.points.size(); ++i)
    CHECK(bp.poset.ranks[i] == balanced_length(bp.points[i]));
  CHECK(rank_polynomial(balanced_poset(3, 3).poset) ==
        IntPolynomial::from_exponents({3, 6}));
}

TEST_CASE("flip order matches the balanced order through n = 3") {
  for (int n = 2; n <= 3; ++n) {
    auto mp = matchings_poset(n);
    auto bp = balanced_poset(2, n);
    std::map<ColoredPerm, int> index;
    for (std::size_t j = 0; j < bp.points.size(); ++j)
      index[bp.points[j]] = static_cast<int>(j);
    std::vector<int> to_bp(mp.points.size());
    for (std::size_t i = 0; i < mp.points.size(); ++i)
      to_bp[i] = index.at(matching_to_balanced(mp.points[i]));
    CHECK(is_order_isomorphism(mp.poset, bp.poset, to_bp));
  }
}

TEST_CASE("flip order and balanced order diverge at n = 4") {
  auto mp = matchings_poset(4);
  auto bp = balanced_poset(2, 4);
  CHECK(rank_polynomial(mp.poset) == rank_polynomial(bp.poset));
  CHECK(mp.poset.covers.size() == bp.poset.covers.size());
  // walk-count certificates: the cover graphs cannot be isomorphic
  CHECK(closed_walk_count(mp.poset, 8) == 61381056);
  CHECK(closed_walk_count(bp.poset, 8) == 61381824);
}

TEST_CASE("color-forgetting projection") {
  for (auto [r, n] : {std::pair{2, 3}, std::pair{3, 2}}) {
    auto report = check_balanced_projection(r, n);
    CHECK(report.all());
    long long expect = 1;
    for (int i = 2; i < n; ++i) expect *= i;
    for (int i = 0; i < n - 1; ++i) expect *= r;
    CHECK(report.maximal_interval_count == expect);
  }
}

TEST_CASE("embedding signed permutations into the symmetric group") {
  SignedPerm flip({-1, 2});
  Perm image = embed_signed_in_symmetric(flip);
  CHECK(image == Perm({1, 0, 2, 3}));  // letters 1,2 swap; 3,4 fixed
  SignedPerm swap_letters({2, 1});
  CHECK(embed_signed_in_symmetric(swap_letters) == Perm({2, 3, 0, 1}));

  GroupUniverse s4 = enumerate_group(CoxeterDescriptor::A(4));
  auto members = embedded_hyperoctahedral(s4, 2);
  CHECK(members.size() == 8);
}

TEST_CASE("stabilizer of the base matching in the symmetric group") {
  GroupUniverse s4 = enumerate_group(CoxeterDescriptor::A(4));
  auto report = check_hyperoctahedral(s4, 2);
  CHECK(report.quasi.quasi_modular);
  CHECK(!report.modular);
  CHECK(report.witness_exceeds_bound());
  CHECK(report.quasi.subgroup_own_poly == IntPolynomial::from_exponents({1, 3}));
  CHECK(report.quasi.quotient_poly == IntPolynomial({1, 2}));
}
