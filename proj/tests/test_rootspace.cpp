#include <stdexcept>

#include "doctest.h"

#include "absord/coxeter.hpp"
#include "absord/group.hpp"
#include "absord/rootspace.hpp"

using namespace absord;

namespace {

Vec vec(std::vector<long long> xs) {
  Vec v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("rational text round trips") {
  CHECK(rat_str(Rat(3, 4)) == "3/4");
  CHECK(rat_str(Rat(-2)) == "-2");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-2") == Rat(-2));
  CHECK(parse_rat("6/4") == Rat(3, 2));
}

TEST_CASE("span canonical form") {
  Flat x = span(3, {vec({2, 0, 0})});
  CHECK(x == span(3, {vec({1, 0, 0})}));
  CHECK(x.dim() == 1);
  CHECK(span(3, {vec({1, 1, 0})}) == span(3, {vec({-1, -1, 0})}));
  CHECK(span(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 0})}).dim() == 2);
  CHECK(span(3, {vec({0, 0, 0})}) == Flat::zero(3));
  CHECK(matrix_rank({vec({1, 2, 3}), vec({2, 4, 6}), vec({1, 0, 0})}) == 2);
}

TEST_CASE("flat operations") {
  Flat x = span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  Flat y = span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK(flat_intersection(x, y) == span(3, {vec({0, 1, 0})}));
  CHECK(flat_sum(x, y).dim() == 3);
  CHECK(flat_contains(x, vec({3, -7, 0})));
  CHECK(!flat_contains(x, vec({0, 0, 1})));
  CHECK(flat_subset(span(3, {vec({1, 1, 0})}), x));
  CHECK(!flat_subset(x, y));
  CHECK(flat_intersection(x, Flat::zero(3)) == Flat::zero(3));
  CHECK(flat_sum(x, Flat::zero(3)) == x);

  Flat diag = span(2, {vec({1, -1})});
  CHECK(flat_intersection(span(2, {vec({1, 0})}), diag) == Flat::zero(2));
}

TEST_CASE("root systems") {
  for (auto desc : {CoxeterDescriptor::A(4), CoxeterDescriptor::B(3),
                    CoxeterDescriptor::D(4), CoxeterDescriptor::I2(3),
                    CoxeterDescriptor::I2(4)}) {
    RootSystem rs = root_system(desc);
    CHECK(rs.roots.size() == rs.root_reflections.size());
    CHECK(rs.roots.size() == reflections(rs.desc).elements.size());
    for (const auto& r : rs.roots) {
      int last = -1;
      for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != Rat(0)) last = static_cast<int>(j);
      REQUIRE(last >= 0);
      if (rs.desc.family == Family::D) {
        CHECK(r[last] > Rat(0));
      } else {
        int first = 0;
        while (r[first] == Rat(0)) ++first;
        CHECK(r[first] > Rat(0));
      }
    }
  }
  CHECK_THROWS_AS(root_system(CoxeterDescriptor::I2(5)), std::invalid_argument);
}

TEST_CASE("moved space dimension equals reflection length") {
  for (auto desc : {CoxeterDescriptor::A(4), CoxeterDescriptor::B(3)}) {
    GroupUniverse U = enumerate_group(desc);
    for (int i = 0; i < U.size(); ++i) {
      Flat mov = moved_space(desc, U.elems[i]);
      Flat fix = fixed_space(desc, U.elems[i]);
      CHECK(mov.dim() == U.lengths[i]);
      CHECK(mov.dim() + fix.dim() == mov.ambient_dim);
      CHECK(flat_intersection(mov, fix) == Flat::zero(mov.ambient_dim));
    }
  }
}

TEST_CASE("reflection fixes its hyperplane and negates its root") {
  auto desc = CoxeterDescriptor::B(3);
  RootSystem rs = root_system(desc);
  for (std::size_t t = 0; t < rs.roots.size(); ++t) {
    Flat mov = moved_space(desc, rs.root_reflections[t]);
    CHECK(mov.dim() == 1);
    CHECK(flat_contains(mov, rs.roots[t]));
    CHECK(fixed_space(desc, rs.root_reflections[t]).dim() == 2);
  }
}

TEST_CASE("carter independence") {
  auto desc = CoxeterDescriptor::A(4);
  RootSystem rs = root_system(desc);
  GroupUniverse U = enumerate_group(desc);
  auto root_of = [&](const char* s) {
    GroupElement w = parse_element(desc, s);
    for (std::size_t t = 0; t < rs.roots.size(); ++t)
      if (rs.root_reflections[t] == w) return rs.roots[t];
    throw std::logic_error("root not found");
  };
  std::vector<Vec> indep{root_of("(1 2)"), root_of("(2 3)")};
  CHECK(carter_independent(indep, 4));
  std::vector<Vec> dep{root_of("(1 2)"), root_of("(2 3)"), root_of("(1 3)")};
  CHECK(!carter_independent(dep, 4));
}

TEST_CASE("dihedral reroute through crystallographic copies") {
  for (int m : {3, 4}) {
    auto desc = CoxeterDescriptor::I2(m);
    GroupUniverse U = enumerate_group(desc);
    auto [cdesc, cid] = crystallographic_form(desc, desc.identity_element());
    CHECK(cdesc == (m == 3 ? CoxeterDescriptor::A(3) : CoxeterDescriptor::B(2)));
    CHECK(is_identity(cid));
    for (int i = 0; i < U.size(); ++i)
      CHECK(moved_space(desc, U.elems[i]).dim() == U.lengths[i]);
  }
  CHECK_THROWS_AS(
      crystallographic_form(CoxeterDescriptor::I2(5),
                            CoxeterDescriptor::I2(5).identity_element()),
      std::invalid_argument);
}
