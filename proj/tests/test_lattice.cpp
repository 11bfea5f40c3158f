#include <numeric>
#include <set>

#include "doctest.h"

#include "absord/cosets.hpp"
#include "absord/coxeter.hpp"
#include "absord/group.hpp"
#include "absord/lattice.hpp"
#include "absord/polynomial.hpp"

using namespace absord;

namespace {

IntPolynomial monic_from_roots(const std::vector<int>& roots) {
  IntPolynomial p = IntPolynomial::one();
  for (int r : roots) p = p * IntPolynomial({-r, 1});
  return p;
}

int pid(const GroupUniverse& U, const char* s) {
  return U.id(parse_element(U.desc, s));
}

}  // namespace

TEST_CASE("flat counts and characteristic polynomials") {
  struct Row {
    const char* name;
    int flats;
  };
  for (auto [name, flats] : {Row{"S4", 15}, Row{"B3", 24}}) {
    GroupUniverse U = enumerate_group(CoxeterDescriptor::parse(name));
    auto L = build_flat_lattice(U);
    CHECK(L.size() == flats);
    CHECK(L.top_rank == U.desc.coxeter_rank());
    CHECK(characteristic_polynomial(L) == monic_from_roots(U.desc.exponents()));
    CHECK(L.rank(L.bottom()) == 0);
    CHECK(L.rank(L.top()) == L.top_rank);
  }
}

TEST_CASE("mobius counts match moved spaces") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::B(3));
  auto L = build_flat_lattice(U);
  auto counts = moved_space_counts(L);
  long long total = std::accumulate(counts.begin(), counts.end(), 0LL);
  CHECK(total == U.size());
  for (int f = 0; f < L.size(); ++f) {
    long long expect = (L.rank(f) % 2 == 0) ? L.mobius[f] : -L.mobius[f];
    CHECK(counts[f] == expect);
    CHECK(expect > 0);
  }
  CHECK(L.mobius[L.bottom()] == 1);
}

TEST_CASE("meet and join") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto L = build_flat_lattice(U);
  for (int a = 0; a < L.size(); ++a) {
    CHECK(L.meet(a, L.bottom()) == L.bottom());
    CHECK(L.join(a, L.top()) == L.top());
    CHECK(L.meet(a, a) == a);
    CHECK(L.join(a, a) == a);
    for (int b = 0; b < L.size(); ++b) {
      int m = L.meet(a, b);
      int j = L.join(a, b);
      CHECK(L.leq(m, a));
      CHECK(L.leq(m, b));
      CHECK(L.leq(a, j));
      CHECK(L.leq(b, j));
      // semimodular inequality of a geometric lattice
      CHECK(L.rank(m) + L.rank(j) <= L.rank(a) + L.rank(b));
    }
  }
}

TEST_CASE("modular flat tests agree") {
  for (const char* name : {"S4", "B3"}) {
    GroupUniverse U = enumerate_group(CoxeterDescriptor::parse(name));
    auto L = build_flat_lattice(U);
    int modular = 0;
    for (int f = 0; f < L.size(); ++f) {
      bool a = is_modular_flat(L, f);
      CHECK(a == modular_via_intersections(L, f));
      modular += a;
    }
    CHECK(modular == (std::string(name) == "S4" ? 12 : 14));
  }
}

TEST_CASE("interval characteristic polynomials") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto L = build_flat_lattice(U);
  CHECK(interval_characteristic_polynomial(L, L.top()) == characteristic_polynomial(L));
  CHECK(interval_characteristic_polynomial(L, L.bottom()) == IntPolynomial::one());
  for (int f = 0; f < L.size(); ++f)
    CHECK(interval_characteristic_polynomial(L, f).degree() == L.rank(f));
}

TEST_CASE("lattice factorization holds exactly on modular flats of the square group") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::B(2));
  auto L = build_flat_lattice(U);
  for (int f = 0; f < L.size(); ++f)
    CHECK(lattice_factorization_holds(L, f) == is_modular_flat(L, f));
}

TEST_CASE("parabolic subgroups of flats") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto L = build_flat_lattice(U);
  for (int f = 0; f < L.size(); ++f) {
    auto members = flat_parabolic_members(L, f);
    CHECK(is_parabolic_subgroup(L, members));
    CHECK(flat_of_subgroup(L, members) == f);
    if (L.rank(f) == 1) CHECK(members.size() == 2);
  }
  CHECK(flat_parabolic_members(L, L.bottom()) == std::vector<int>{0});
  CHECK(flat_parabolic_members(L, L.top()).size() == 24);

  // the sign-change subgroup of the square group spans the top flat yet
  // contains only two of the four reflections, so it is not parabolic
  GroupUniverse B = enumerate_group(CoxeterDescriptor::B(2));
  auto LB = build_flat_lattice(B);
  auto signs = subgroup_closure(B, {pid(B, "(1 -1)"), pid(B, "(2 -2)")});
  CHECK(flat_of_subgroup(LB, signs) == LB.top());
  CHECK_FALSE(is_parabolic_subgroup(LB, signs));
}

TEST_CASE("modularity equivalences are consistent across every flat") {
  for (const char* name : {"S4", "B3"}) {
    GroupUniverse U = enumerate_group(CoxeterDescriptor::parse(name));
    auto L = build_flat_lattice(U);
    for (int f = 0; f < L.size(); ++f) {
      auto rep = check_modular_equivalence(L, f);
      CHECK(rep.consistent());
      CHECK(rep.flat == f);
      CHECK(rep.subgroup_modular == rep.group_factorization);
      CHECK(rep.flat_modular == is_modular_flat(L, f));
    }
  }
}

TEST_CASE("complement length polynomial at the extremes") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto L = build_flat_lattice(U);
  CHECK(complement_length_poly(L, L.bottom()) ==
        IntPolynomial::from_exponents(U.desc.exponents()));
  CHECK(complement_length_poly(L, L.top()) == IntPolynomial::one());
}
