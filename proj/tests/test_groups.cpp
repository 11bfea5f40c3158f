#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"

#include "absord/coxeter.hpp"
#include "absord/elements.hpp"
#include "absord/group.hpp"

using namespace absord;

TEST_CASE("descriptor parsing and arithmetic") {
  CHECK(CoxeterDescriptor::parse("S4") == CoxeterDescriptor::A(4));
  CHECK(CoxeterDescriptor::parse("A4") == CoxeterDescriptor::A(4));
  CHECK(CoxeterDescriptor::parse("B3") == CoxeterDescriptor::B(3));
  CHECK(CoxeterDescriptor::parse("D4") == CoxeterDescriptor::D(4));
  CHECK(CoxeterDescriptor::parse("I2(5)") == CoxeterDescriptor::I2(5));
  CHECK(CoxeterDescriptor::parse("G(2,3)") == CoxeterDescriptor::G(2, 3));
  CHECK_THROWS_AS(CoxeterDescriptor::parse("Q7"), std::invalid_argument);

  CHECK(CoxeterDescriptor::A(4).order() == 24);
  CHECK(CoxeterDescriptor::B(3).order() == 48);
  CHECK(CoxeterDescriptor::D(4).order() == 192);
  CHECK(CoxeterDescriptor::I2(7).order() == 14);
  CHECK(CoxeterDescriptor::G(3, 3).order() == 162);

  CHECK(CoxeterDescriptor::A(4).exponents() == std::vector<int>{1, 2, 3});
  CHECK(CoxeterDescriptor::B(3).exponents() == std::vector<int>{1, 3, 5});
  auto d4 = CoxeterDescriptor::D(4).exponents();
  std::sort(d4.begin(), d4.end());
  CHECK(d4 == std::vector<int>{1, 3, 3, 5});
  CHECK(CoxeterDescriptor::I2(6).exponents() == std::vector<int>{1, 5});
  CHECK_THROWS_AS(CoxeterDescriptor::G(2, 2).exponents(), std::invalid_argument);
}

TEST_CASE("enumeration basics") {
  for (auto desc : {CoxeterDescriptor::A(4), CoxeterDescriptor::B(3),
                    CoxeterDescriptor::I2(5), CoxeterDescriptor::G(3, 2)}) {
    GroupUniverse U = enumerate_group(desc);
    CHECK(U.size() == desc.order());
    CHECK(is_identity(U.elems[0]));
    CHECK(U.lengths[0] == 0);
    for (int i = 0; i < U.size(); ++i) {
      CHECK(U.mul(i, U.inv(i)) == 0);
      CHECK(U.mul(U.inv(i), i) == 0);
    }
  }
}

TEST_CASE("reflection sets") {
  CHECK(enumerate_group(CoxeterDescriptor::A(4)).reflections.size() == 6);
  CHECK(enumerate_group(CoxeterDescriptor::B(3)).reflections.size() == 9);
  CHECK(enumerate_group(CoxeterDescriptor::D(4)).reflections.size() == 12);
  CHECK(enumerate_group(CoxeterDescriptor::I2(5)).reflections.size() == 5);
  // r per pair plus n(r-1) diagonal pseudoreflections
  CHECK(enumerate_group(CoxeterDescriptor::G(2, 2)).reflections.size() == 4);
  CHECK(enumerate_group(CoxeterDescriptor::G(3, 2)).reflections.size() == 7);
  CHECK(enumerate_group(CoxeterDescriptor::G(3, 3)).reflections.size() == 15);
  CHECK(enumerate_group(CoxeterDescriptor::G(2, 2)).refl_kind ==
        ReflectionSet::Kind::pseudo);

  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  for (int t : U.reflections) {
    CHECK(U.lengths[t] == 1);
    CHECK(U.mul(t, t) == 0);
  }
}

TEST_CASE("cycle notation round trips") {
  auto a4 = CoxeterDescriptor::A(4);
  CHECK(to_string(parse_element(a4, "(1 2)")) == "(1 2)");
  CHECK(to_string(parse_element(a4, "(1 2 3)(4)")) == "(1 2 3)");
  CHECK(parse_element(a4, "e") == GroupElement(Perm::identity(4)));

  auto b2 = CoxeterDescriptor::B(2);
  CHECK(parse_element(b2, "(1 2)") == parse_element(b2, "((1 2))"));
  SignedPerm flip({-1, 2});
  CHECK(parse_element(b2, "(1 -1)") == GroupElement(flip));

  auto g23 = CoxeterDescriptor::G(2, 3);
  ColoredPerm w(2, {0, 1, 0}, Perm({1, 0, 2}));
  CHECK(parse_element(g23, to_string(GroupElement(w))) == GroupElement(w));

  auto i25 = CoxeterDescriptor::I2(5);
  CHECK(parse_element(i25, "r2") == GroupElement(DihedralElem(5, false, 2)));
  CHECK(parse_element(i25, "s1") == GroupElement(DihedralElem(5, true, 1)));

  CHECK_THROWS_AS(parse_element(a4, "(1 5)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(a4, "(1 x)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(a4, "(1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(b2, "(1 -2"), std::invalid_argument);
}

TEST_CASE("closed-form length against breadth-first search") {
  for (auto desc : {CoxeterDescriptor::B(3), CoxeterDescriptor::G(3, 2)}) {
    GroupUniverse U = enumerate_group(desc);
    ReflectionSet gens = reflections(desc);
    for (const auto& w : U.elems)
      CHECK(absolute_length(desc, w) == absolute_length_bfs(U.elems, gens, w));
  }
}

TEST_CASE("length spot values") {
  auto a4 = CoxeterDescriptor::A(4);
  CHECK(absolute_length(a4, parse_element(a4, "(1 2 3)")) == 2);
  CHECK(absolute_length(a4, parse_element(a4, "(1 2)(3 4)")) == 2);
  CHECK(absolute_length(a4, parse_element(a4, "(1 2 3 4)")) == 3);
  auto b3 = CoxeterDescriptor::B(3);
  CHECK(absolute_length(b3, parse_element(b3, "(1 -1)")) == 1);
  CHECK(absolute_length(b3, parse_element(b3, "(1 -1)(2 -2)")) == 2);
  auto g22 = CoxeterDescriptor::G(2, 2);
  CHECK(absolute_length(g22, GroupElement(ColoredPerm(2, {1, 1}, Perm({1, 0})))) == 1);
  CHECK(absolute_length(g22, GroupElement(ColoredPerm(2, {1, 0}, Perm::identity(2)))) == 1);
}

TEST_CASE("bfs distances reproduce lengths") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto dist = bfs_distances(U, U.reflections);
  CHECK(dist == U.lengths);
}

TEST_CASE("subgroup machinery") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto pid = [&](const char* s) { return U.id(parse_element(U.desc, s)); };

  CHECK(subgroup_closure(U, {pid("(1 2)")}).size() == 2);
  CHECK(subgroup_closure(U, {pid("(1 2)"), pid("(2 3)")}).size() == 6);
  CHECK(subgroup_closure(U, {pid("(1 2)"), pid("(3 4)")}).size() == 4);

  auto subs = all_subgroups(U);
  CHECK(subs.size() == 30);
  auto reps = subgroup_conjugacy_reps(U, subs);
  CHECK(reps.size() == 11);

  auto classes = reflection_conjugacy_classes(U);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].size() == 6);

  GroupUniverse B = enumerate_group(CoxeterDescriptor::B(3));
  auto bclasses = reflection_conjugacy_classes(B);
  REQUIRE(bclasses.size() == 2);
  std::multiset<std::size_t> sizes{bclasses[0].size(), bclasses[1].size()};
  CHECK(sizes == std::multiset<std::size_t>{3, 6});

  auto rsubs = reflection_subgroups(U);
  for (const auto& H : rsubs) {
    std::vector<int> gens;
    for (int h : H)
      if (U.lengths[h] == 1) gens.push_back(h);
    CHECK(subgroup_closure(U, gens) == H);
  }
}
