#include <string>

#include "doctest.h"
#include "json.hpp"

#include "absord/cosets.hpp"
#include "absord/coxeter.hpp"
#include "absord/group.hpp"
#include "absord/io.hpp"
#include "absord/lattice.hpp"
#include "absord/matchings.hpp"
#include "absord/rootspace.hpp"

using namespace absord;

TEST_CASE("poset table golden bytes") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(3));
  std::string expect =
      "elements: 6\n"
      "rank polynomial: 1 + 3q + 2q^2\n"
      "id    rank  label\n"
      "0     0     e\n"
      "1     1     (1 2)\n"
      "2     1     (1 3)\n"
      "3     1     (2 3)\n"
      "4     2     (1 2 3)\n"
      "5     2     (1 3 2)\n"
      "covers:\n"
      "  e < (1 2)\n"
      "  e < (1 3)\n"
      "  e < (2 3)\n"
      "  (1 2) < (1 2 3)\n"
      "  (1 2) < (1 3 2)\n"
      "  (1 3) < (1 2 3)\n"
      "  (1 3) < (1 3 2)\n"
      "  (2 3) < (1 2 3)\n"
      "  (2 3) < (1 3 2)\n";
  CHECK(poset_table(group_poset(U)) == expect);
}

TEST_CASE("poset json structure and stability") {
  auto mp = matchings_poset(2);
  std::string once = poset_json(mp.poset);
  CHECK(once == poset_json(mp.poset));

  auto j = nlohmann::json::parse(once);
  CHECK(j["size"] == 3);
  CHECK(j["rank_polynomial"] == "1 + 2q");
  CHECK(j["elements"].size() == 3);
  CHECK(j["elements"][0]["label"] == "{1,-1}{2,-2}");
  CHECK(j["elements"][0]["rank"] == 0);
  CHECK(j["covers"].size() == 2);
}

TEST_CASE("poset dot output") {
  auto mp = matchings_poset(2);
  std::string dot = poset_dot(mp.poset);
  CHECK(dot.find("digraph poset") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("n0 [label=\"{1,-1}{2,-2}\"]") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("{ rank=same; n1; n2; }") != std::string::npos);
}

TEST_CASE("modularity reports") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(4));
  auto ctx = full_context(U);
  auto pid = [&](const char* s) { return U.id(parse_element(U.desc, s)); };
  auto bad = check_modular(ctx, subgroup_closure(U, {pid("(1 2)"), pid("(3 4)")}));
  auto j = nlohmann::json::parse(modularity_json(U, bad));
  CHECK(j["modular"] == false);
  CHECK(j["factorization_holds"] == false);
  REQUIRE(bad.witness_coset.has_value());
  int w = *bad.witness_coset;
  CHECK(j["witness_coset"] == w);
  CHECK(j["cosets"].size() == 6);
  CHECK(j["cosets"][0]["minimum"] == "e");
  CHECK(j["cosets"][w]["minimum"].is_null());
  CHECK(j["cosets"][w]["min_length_reps"].size() == 2);
  std::string table = modularity_table(U, bad);
  CHECK(table.find("modular: no") != std::string::npos);
  std::string tail = "first coset without a minimum: [" + std::to_string(w) + "]";
  CHECK(table.find(tail) != std::string::npos);

  auto good = check_modular(ctx, subgroup_closure(U, {pid("(1 2)"), pid("(2 3)")}));
  auto jg = nlohmann::json::parse(modularity_json(U, good));
  CHECK(jg["modular"] == true);
  CHECK(jg["witness_coset"].is_null());
  CHECK(jg["quotient_polynomial"] == "1 + 3q");
}

TEST_CASE("quasi reports") {
  QuasiModularityReport r;
  r.quasi_modular = true;
  r.group_poly = IntPolynomial({1, 3, 2});
  r.subgroup_own_poly = IntPolynomial({1, 1});
  r.quotient_poly = IntPolynomial({1, 2});
  auto j = nlohmann::json::parse(quasi_json(r));
  CHECK(j["quasi_modular"] == true);
  CHECK(j["group_polynomial"] == "1 + 3q + 2q^2");
  CHECK(quasi_table(r).find("quasi-modular: yes") != std::string::npos);
}

TEST_CASE("lattice reports") {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(3));
  auto L = build_flat_lattice(U);
  auto j = nlohmann::json::parse(lattice_json(L));
  CHECK(j["flat_count"] == 5);
  CHECK(j["rank"] == 2);
  CHECK(j["characteristic_polynomial"] == "2 - 3q + q^2");
  CHECK(j["flats"].size() == 5);
  CHECK(j["flats"][0]["mobius"] == 1);
  std::string table = lattice_table(L);
  CHECK(table.find("flats: 5") != std::string::npos);
  CHECK(lattice_json(L) == lattice_json(L));
}

TEST_CASE("flat text form") {
  CHECK(flat_str(Flat::zero(3)) == "{0}");
  Flat line = span(2, {{Rat(1), Rat(-1)}});
  CHECK(flat_str(line) == "span{(1,-1)}");
}
