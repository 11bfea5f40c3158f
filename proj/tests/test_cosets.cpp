#include <set>
#include <vector>

#include "doctest.h"

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

TEST_CASE("contexts carry graph-distance lengths") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto ctx = full_context(U);
  CHECK(ctx.members.size() == 24);
  for (int w : ctx.members) CHECK(ctx.length_of(w) == U.lengths[w]);
}

TEST_CASE("absolute order comparisons") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto ctx = full_context(U);
  int t = pid(U, "(1 2)");
  int c3 = pid(U, "(1 2 3)");
  int c4 = pid(U, "(1 2 3 4)");
  int dd = pid(U, "(1 3)(2 4)");
  CHECK(absolute_leq(ctx, 0, c4));
  CHECK(absolute_leq(ctx, t, c3));
  CHECK(absolute_leq(ctx, c3, c4));
  CHECK(!absolute_leq(ctx, c4, c3));
  CHECK(!absolute_leq(ctx, dd, c4));  // the other double transposition divides it
  CHECK(absolute_leq(ctx, pid(U, "(1 4)(2 3)"), c4));
}

TEST_CASE("coset enumeration") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto ctx = full_context(U);
  auto H = subgroup_closure(U, {pid(U, "(1 2)"), pid(U, "(2 3)")});
  auto cosets = enumerate_cosets(ctx, H);
  CHECK(cosets.size() == 4);
  CHECK(cosets[0] == H);
  std::set<int> seen;
  for (const auto& c : cosets) {
    CHECK(c.size() == 6);
    seen.insert(c.begin(), c.end());
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("modular subgroup with factorization") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto ctx = full_context(U);
  auto H = subgroup_closure(U, {pid(U, "(1 2)"), pid(U, "(2 3)")});
  auto rep = check_modular(ctx, H);
  CHECK(rep.modular);
  CHECK(rep.factorization_holds);
  CHECK(rep.quotient_poly == IntPolynomial({1, 3}));
  CHECK(rep.group_poly == rep.subgroup_poly * rep.quotient_poly);
  CHECK(!rep.witness_coset.has_value());

  auto section = minimum_section(ctx, rep);
  std::set<int> minima(section.begin(), section.end());
  std::set<int> expect{0, pid(U, "(1 4)"), pid(U, "(2 4)"), pid(U, "(3 4)")};
  CHECK(minima == expect);
  CHECK(minima_form_ideal(ctx, rep));
}

TEST_CASE("coset with two shortest elements has no minimum") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto ctx = full_context(U);
  auto H = subgroup_closure(U, {pid(U, "(1 2)"), pid(U, "(3 4)")});
  auto rep = check_modular(ctx, H);
  CHECK(!rep.modular);
  CHECK(!rep.factorization_holds);
  REQUIRE(rep.witness_coset.has_value());
  const auto& reps = rep.min_length_reps[*rep.witness_coset];
  std::set<int> shortest(reps.begin(), reps.end());
  CHECK(shortest == std::set<int>{pid(U, "(1 3)(2 4)"), pid(U, "(1 4)(2 3)")});
  CHECK(!rep.minima[*rep.witness_coset].has_value());

  auto ind = induced_subposet(group_poset(U), rep.cosets[*rep.witness_coset]);
  CHECK(ind.size() == 4);
  CHECK(ind.covers.size() == 4);
  CHECK(ind.maximal_elements().size() == 2);
}

TEST_CASE("coset whose unique shortest element is still not a minimum") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::B(4));
  auto ctx = full_context(U);
  auto H = subgroup_closure(U, {pid(U, "((1 2))"), pid(U, "((1 -2))"),
                                pid(U, "((3 4))"), pid(U, "((3 -4))")});
  REQUIRE(H.size() == 16);
  std::vector<int> coset;
  int t = pid(U, "((1 3))");
  for (int h : H) coset.push_back(U.mul(t, h));
  std::sort(coset.begin(), coset.end());
  auto reps = coset_min_length_elements(ctx, coset);
  CHECK(reps == std::vector<int>{t});
  CHECK(!coset_minimum(ctx, coset).has_value());
}

TEST_CASE("group and coset posets") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  RankedPoset p = group_poset(U);
  CHECK(rank_polynomial(p) == IntPolynomial::from_exponents({1, 2, 3}));
  for (const auto& [lo, hi] : p.covers) CHECK(p.ranks[hi] == p.ranks[lo] + 1);

  auto H = subgroup_closure(U, {pid(U, "(1 2)"), pid(U, "(2 3)")});
  auto cp = coset_poset(U, H);
  CHECK(cp.poset.size() == 4);
  CHECK(rank_polynomial(cp.poset) == IntPolynomial({1, 3}));
  std::set<std::string> labels(cp.poset.labels.begin(), cp.poset.labels.end());
  CHECK(labels == std::set<std::string>{"e", "(1 4)", "(2 4)", "(3 4)"});
}

TEST_CASE("quasi-modularity with own reflections") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto ctx = full_context(U);
  auto H = subgroup_closure(U, {pid(U, "(1 2)"), pid(U, "(2 3)")});
  std::vector<int> own;
  for (int t : U.reflections)
    if (std::binary_search(H.begin(), H.end(), t)) own.push_back(t);
  auto rep = check_quasi_modular(ctx, H, own);
  CHECK(rep.quasi_modular);
  CHECK(rep.quotient_poly == IntPolynomial({1, 3}));
  CHECK(rep.subgroup_own_poly == IntPolynomial::from_exponents({1, 2}));
  CHECK_THROWS(check_quasi_modular(ctx, H, {pid(U, "(1 2)")}));
}

TEST_CASE("moved span of a subgroup") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto H = subgroup_closure(U, {pid(U, "(1 2)"), pid(U, "(2 3)")});
  CHECK(subgroup_moved_span(U, H).dim() == 2);
  CHECK(subgroup_moved_span(U, {0}).dim() == 0);
}

TEST_CASE("sub context lengths use the subgroup's own graph") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto H = subgroup_closure(U, {pid(U, "(1 2)"), pid(U, "(3 4)")});
  std::vector<int> gens{pid(U, "(1 2)"), pid(U, "(3 4)")};
  auto sub = sub_context(U, H, gens);
  CHECK(sub.length_of(0) == 0);
  CHECK(sub.length_of(pid(U, "(1 2)")) == 1);
  CHECK(sub.length_of(U.mul(pid(U, "(1 2)"), pid(U, "(3 4)"))) == 2);
}
