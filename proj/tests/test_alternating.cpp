#include <algorithm>
#include <set>

#include "doctest.h"

#include "absord/alternating.hpp"
#include "absord/cosets.hpp"
#include "absord/coxeter.hpp"
#include "absord/group.hpp"
#include "absord/polynomial.hpp"
#include "absord/poset.hpp"

using namespace absord;

namespace {

int pid(const GroupUniverse& U, const char* s) {
  return U.id(parse_element(U.desc, s));
}

}  // namespace

TEST_CASE("context membership and twisted generators") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  int s0 = pid(U, "(1 2)");
  auto A = make_alternating(U, s0);
  CHECK(A.members.size() == 12);
  for (int w : A.members) CHECK(U.lengths[w] % 2 == 0);
  CHECK(A.members[0] == 0);

  auto t0 = twisted_reflection_set(U, s0);
  CHECK(t0.size() == 6);
  CHECK(std::binary_search(t0.begin(), t0.end(), 0));
  CHECK(A.twisted == t0);
  for (int w : t0) CHECK(U.lengths[w] % 2 == 0);
}

TEST_CASE("twisted rank polynomial is the length polynomial quotient") {
  struct Row {
    const char* group;
    const char* s0;
  };
  for (auto [group, s0] : {Row{"S4", "(1 2)"}, Row{"B3", "(1 -1)"},
                           Row{"B3", "((1 2))"}, Row{"S3", "(1 2)"}}) {
    GroupUniverse U = enumerate_group(CoxeterDescriptor::parse(group));
    auto A = make_alternating(U, pid(U, s0));
    auto quot = IntPolynomial::from_counts(U.lengths).divide_exact(IntPolynomial({1, 1}));
    REQUIRE(quot.has_value());
    CHECK(alternating_rank_poly(A) == *quot);
  }
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto A = make_alternating(U, pid(U, "(1 2)"));
  CHECK(alternating_rank_poly(A) == IntPolynomial({1, 5, 6}));
}

TEST_CASE("length dichotomies") {
  for (const char* group : {"S4", "B3"}) {
    GroupUniverse U = enumerate_group(CoxeterDescriptor::parse(group));
    for (int s0 : U.reflections) CHECK(length_dichotomies_hold(make_alternating(U, s0)));
  }
}

TEST_CASE("folding onto the coset order of the two-element subgroup") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  int s0 = pid(U, "(1 2)");
  auto A = make_alternating(U, s0);
  auto p = alternating_poset(A);
  auto halves = coset_poset(U, subgroup_closure(U, {s0}));
  CHECK(halves.poset.size() == 12);
  auto fold = fold_map(A, halves);
  CHECK(is_order_isomorphism(p, halves.poset, fold));
}

TEST_CASE("ascent sets are order ideals with the twisted rank polynomial") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  int s0 = pid(U, "(1 2)");
  auto asc = ascent_set(U, s0);
  CHECK(asc.size() == 12);
  std::vector<char> member(U.size(), 0);
  std::vector<int> lengths;
  for (int w : asc) {
    member[w] = 1;
    lengths.push_back(U.lengths[w]);
  }
  CHECK(is_order_ideal(group_poset(U), member));
  CHECK(IntPolynomial::from_counts(lengths) == IntPolynomial({1, 5, 6}));
}

TEST_CASE("odd palindromes stabilize on the twisted reflections") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  int s0 = pid(U, "(1 2)");
  auto t0 = twisted_reflection_set(U, s0);
  CHECK(odd_palindromes(U, s0, 1) == t0);
  CHECK(odd_palindromes(U, s0, 2) == t0);

  GroupUniverse B = enumerate_group(CoxeterDescriptor::B(3));
  int b0 = pid(B, "(1 -1)");
  auto bt0 = twisted_reflection_set(B, b0);
  CHECK(odd_palindromes(B, b0, 1) != bt0);  // depth one is not enough here
  CHECK(odd_palindromes(B, b0, 2) == bt0);
  CHECK(odd_palindromes(B, b0, 3) == bt0);
}

TEST_CASE("the two reflection classes of B3 twist to distinct orders") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::B(3));
  auto classes = reflection_conjugacy_classes(U);
  REQUIRE(classes.size() == 2);
  auto p1 = alternating_poset(make_alternating(U, classes[0][0]));
  auto p2 = alternating_poset(make_alternating(U, classes[1][0]));
  CHECK(rank_polynomial(p1) == rank_polynomial(p2));
  CHECK(!are_isomorphic(p1, p2));
}
