#include <vector>

#include "doctest.h"

#include "absord/alternating.hpp"
#include "absord/coxeter.hpp"
#include "absord/group.hpp"
#include "absord/polynomial.hpp"
#include "absord/poset.hpp"
#include "absord/tuples.hpp"

using namespace absord;

TEST_CASE("tuple actions of the symmetric group") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));

  auto one = tuple_poset(U, 1);
  CHECK(one.points.size() == 4);
  CHECK(rank_polynomial(one.poset) == IntPolynomial({1, 3}));
  CHECK(one.stabilizer.size() == 6);

  auto two = tuple_poset(U, 2);
  CHECK(two.points.size() == 12);
  CHECK(rank_polynomial(two.poset) == IntPolynomial::from_exponents({2, 3}));
  CHECK(two.stabilizer.size() == 2);

  auto three = tuple_poset(U, 3);
  CHECK(three.points.size() == 24);
  CHECK(rank_polynomial(three.poset) == IntPolynomial::from_exponents({1, 2, 3}));
  CHECK(three.stabilizer.size() == 1);

  // the base tuple is the unique minimum and its entries are the largest letters
  CHECK(two.poset.minimum() >= 0);
  CHECK(two.points[two.poset.minimum()] == std::vector<int>{3, 4});
}

TEST_CASE("colored tuple actions of the wreath products") {
  GroupUniverse W = enumerate_group(CoxeterDescriptor::G(2, 2));
  auto ts = colored_tuple_poset(W, 1);
  CHECK(ts.points.size() == 4);
  CHECK(ts.stabilizer.size() == 2);
  // one step reaches every nonbase point: the quotient of the length
  // polynomials (1+q)(1+3q) / (1+q), not the balanced product (1+2q)
  CHECK(rank_polynomial(ts.poset) == IntPolynomial({1, 3}));
  CHECK(rank_polynomial(ts.poset) != IntPolynomial({1, 2}));

  GroupUniverse W3 = enumerate_group(CoxeterDescriptor::G(2, 3));
  auto ts2 = colored_tuple_poset(W3, 2);
  CHECK(ts2.points.size() == 24);
  CHECK(ts2.stabilizer.size() == 2);
  CHECK(rank_polynomial(ts2.poset) == IntPolynomial::from_exponents({3, 5}));

  // r = 1 degenerates to the plain tuple action
  GroupUniverse W1 = enumerate_group(CoxeterDescriptor::G(1, 4));
  GroupUniverse S = enumerate_group(CoxeterDescriptor::A(4));
  auto colored = colored_tuple_poset(W1, 2);
  auto plain = tuple_poset(S, 2);
  CHECK(colored.points.size() == plain.points.size());
  CHECK(rank_polynomial(colored.poset) == rank_polynomial(plain.poset));
}

TEST_CASE("tree chain formula values") {
  CHECK(tree_chain_formula(2, 1) == 1);
  CHECK(tree_chain_formula(3, 1) == 2);
  CHECK(tree_chain_formula(3, 2) == 6);
  CHECK(tree_chain_formula(4, 1) == 3);
  CHECK(tree_chain_formula(4, 2) == 16);
  CHECK(tree_chain_formula(4, 3) == 96);
  CHECK(tree_chain_formula(5, 4) == 3000);
}

TEST_CASE("full tuples count chains like the reflection graph") {
  // k = n-1 gives (n-1)! n^(n-2)
  for (int n = 2; n <= 5; ++n) {
    long long expect = 1;
    for (int i = 2; i < n; ++i) expect *= i;
    for (int i = 0; i < n - 2; ++i) expect *= n;
    CHECK(tree_chain_formula(n, n - 1) == expect);
  }
}

TEST_CASE("chain counts against direct enumeration") {
  for (int n = 2; n <= 4; ++n) {
    GroupUniverse U = enumerate_group(CoxeterDescriptor::A(n));
    for (int k = 1; k < n; ++k)
      CHECK(count_maximal_chains(tuple_poset(U, k).poset) == tree_chain_formula(n, k));
  }
}

TEST_CASE("alternating chain formula values and cross-check") {
  CHECK(alternating_chain_formula(2) == 1);
  CHECK(alternating_chain_formula(3) == 2);
  CHECK(alternating_chain_formula(4) == 16);
  CHECK(alternating_chain_formula(5) == 300);
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto A = make_alternating(U, U.reflections.front());
  CHECK(count_maximal_chains(alternating_poset(A)) == alternating_chain_formula(4));
}
