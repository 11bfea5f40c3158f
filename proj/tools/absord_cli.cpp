// Command line front door for the absord library: export posets, compute
// polynomials, test (quasi-)modularity, and run verification and searches.
// Every code path is a thin adapter over library calls; output is
// deterministic for fixed arguments.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "absord/alternating.hpp"
#include "absord/cosets.hpp"
#include "absord/coxeter.hpp"
#include "absord/group.hpp"
#include "absord/io.hpp"
#include "absord/lattice.hpp"
#include "absord/matchings.hpp"
#include "absord/parallel.hpp"
#include "absord/polynomial.hpp"
#include "absord/poset.hpp"
#include "absord/tuples.hpp"
#include "absord/verify.hpp"

namespace {

using absord::CoxeterDescriptor;
using absord::GroupUniverse;
using absord::IntPolynomial;
using absord::RankedPoset;
using nlohmann::json;

int emit(const std::string& output_file, const std::string& text) {
  if (output_file.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(output_file, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << output_file << " for writing\n";
    return 1;
  }
  os << text;
  return 0;
}

// "(1 2);(3 4)" -> universe indices of the parsed elements
std::vector<int> parse_generators(const GroupUniverse& U, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = tok.find_last_not_of(" \t");
    std::string word = tok.substr(b, e - b + 1);
    int idx = U.id(absord::parse_element(U.desc, word));
    if (idx < 0)
      throw std::invalid_argument("'" + word + "' is not an element of " + U.desc.name());
    out.push_back(idx);
  }
  if (out.empty()) throw std::invalid_argument("no generators in '" + text + "'");
  return out;
}

IntPolynomial length_polynomial(const GroupUniverse& U) {
  return IntPolynomial::from_counts(U.lengths);
}

struct PosetOpts {
  std::string group;
  std::string action = "self";
  std::string subgroup;
  int k = 1;
  std::string out = "table";
  std::string output_file;
};

int run_poset(const PosetOpts& o) {
  CoxeterDescriptor desc = CoxeterDescriptor::parse(o.group);
  GroupUniverse U = absord::enumerate_group(desc);
  RankedPoset p;
  if (o.action == "self") {
    p = absord::group_poset(U);
  } else if (o.action == "cosets") {
    if (o.subgroup.empty())
      throw std::invalid_argument("--action cosets needs --subgroup");
    auto H = absord::subgroup_closure(U, parse_generators(U, o.subgroup));
    p = absord::coset_poset(U, H).poset;
  } else {  // tuples
    if (o.k < 1 || o.k > desc.rank)
      throw std::invalid_argument("--k must lie in 1.." + std::to_string(desc.rank));
    if (desc.family == absord::Family::A)
      p = absord::tuple_poset(U, o.k).poset;
    else if (desc.family == absord::Family::G)
      p = absord::colored_tuple_poset(U, o.k).poset;
    else
      throw std::invalid_argument("--action tuples needs a family A or G group");
  }
  if (o.out == "json") return emit(o.output_file, absord::poset_json(p));
  if (o.out == "dot") return emit(o.output_file, absord::poset_dot(p));
  return emit(o.output_file, absord::poset_table(p));
}

struct PolyOpts {
  std::string group;
  std::string out = "table";
  std::string output_file;
};

int run_poly(const PolyOpts& o) {
  CoxeterDescriptor desc = CoxeterDescriptor::parse(o.group);
  GroupUniverse U = absord::enumerate_group(desc);
  IntPolynomial poly = length_polynomial(U);
  bool has_exponents = desc.family != absord::Family::G;
  std::vector<int> exps;
  IntPolynomial product;
  if (has_exponents) {
    exps = desc.exponents();
    product = IntPolynomial::from_exponents(exps);
  }
  if (o.out == "json") {
    json j;
    j["group"] = desc.name();
    j["order"] = desc.order();
    j["reflection_count"] = U.reflections.size();
    j["length_polynomial"] = poly.str();
    if (has_exponents) {
      j["exponents"] = exps;
      j["exponent_product"] = product.str();
      j["match"] = poly == product;
    }
    return emit(o.output_file, j.dump(2) + "\n");
  }
  std::ostringstream os;
  os << "group: " << desc.name() << "\n";
  os << "order: " << desc.order() << "\n";
  os << "reflections: " << U.reflections.size() << "\n";
  os << "length polynomial: " << poly.str() << "\n";
  if (has_exponents) {
    os << "exponents:";
    for (int e : exps) os << " " << e;
    os << "\n";
    os << "exponent product:  " << product.str()
       << (poly == product ? " (match)" : " (MISMATCH)") << "\n";
  }
  return emit(o.output_file, os.str());
}

struct ModularOpts {
  std::string group;
  std::string subgroup;
  std::string out = "table";
  std::string output_file;
};

int run_modular(const ModularOpts& o) {
  CoxeterDescriptor desc = CoxeterDescriptor::parse(o.group);
  GroupUniverse U = absord::enumerate_group(desc);
  auto H = absord::subgroup_closure(U, parse_generators(U, o.subgroup));
  auto ctx = absord::full_context(U);
  auto report = absord::check_modular(ctx, H);
  int rc = emit(o.output_file, o.out == "json" ? absord::modularity_json(U, report)
                                               : absord::modularity_table(U, report));
  if (rc != 0) return rc;
  if (report.modular) return 0;
  const auto& reps = report.min_length_reps[*report.witness_coset];
  std::ostringstream w;
  w << "witness: coset of " << absord::to_string(U.elems[reps.front()])
    << " has no minimum; shortest elements:";
  for (int m : reps) w << " " << absord::to_string(U.elems[m]);
  std::cerr << w.str() << "\n";
  return 1;
}

struct QuasiOpts {
  std::string group;
  std::string subgroup;
  std::string own_reflections;
  int hyperoctahedral = 0;
  std::string out = "table";
  std::string output_file;
};

int run_quasi(const QuasiOpts& o) {
  CoxeterDescriptor desc = CoxeterDescriptor::parse(o.group);
  GroupUniverse U = absord::enumerate_group(desc);
  if (o.hyperoctahedral > 0) {
    int n = o.hyperoctahedral;
    if (desc.family != absord::Family::A || desc.rank != 2 * n)
      throw std::invalid_argument("--hyperoctahedral " + std::to_string(n) +
                                  " needs --group S" + std::to_string(2 * n));
    auto report = absord::check_hyperoctahedral(U, n);
    int rc = emit(o.output_file, o.out == "json" ? absord::quasi_json(report.quasi)
                                                 : absord::quasi_table(report.quasi));
    if (rc != 0) return rc;
    std::ostringstream os;
    os << "modular: " << (report.modular ? "yes" : "no");
    if (!report.modular && report.witness_exceeds_bound())
      os << " (a coset representative has ambient length " << report.witness_length
         << ", above the factor degree bound " << report.factor_degree_bound << ")";
    os << "\n";
    std::cerr << os.str();
    return report.quasi.quasi_modular ? 0 : 1;
  }
  if (o.subgroup.empty()) throw std::invalid_argument("quasi needs --subgroup");
  auto H = absord::subgroup_closure(U, parse_generators(U, o.subgroup));
  std::vector<int> own;
  if (!o.own_reflections.empty()) {
    for (int g : parse_generators(U, o.own_reflections)) own.push_back(g);
  } else {
    // default reflection structure: the ambient reflections lying in H
    std::vector<char> in(U.size(), 0);
    for (int h : H) in[h] = 1;
    for (int t : U.reflections)
      if (in[t]) own.push_back(t);
  }
  auto ctx = absord::full_context(U);
  auto report = absord::check_quasi_modular(ctx, H, own);
  int rc = emit(o.output_file, o.out == "json" ? absord::quasi_json(report)
                                               : absord::quasi_table(report));
  if (rc != 0) return rc;
  if (report.quasi_modular) return 0;
  std::cerr << "witness: " << report.subgroup_own_poly.str() << " times "
            << report.quotient_poly.str() << " does not reproduce "
            << report.group_poly.str() << "\n";
  return 1;
}

struct LatticeOpts {
  std::string group;
  std::string out = "table";
  std::string output_file;
};

int run_lattice(const LatticeOpts& o) {
  CoxeterDescriptor desc = CoxeterDescriptor::parse(o.group);
  GroupUniverse U = absord::enumerate_group(desc);
  auto L = absord::build_flat_lattice(U);
  return emit(o.output_file,
              o.out == "json" ? absord::lattice_json(L) : absord::lattice_table(L));
}

struct MatchingsOpts {
  int n = 0;
  int r = 2;
  bool balanced = false;
  bool graph = false;
  bool check_bijection = false;
  std::string out = "table";
  std::string output_file;
};

std::string flip_graph_text(int n, const std::string& out) {
  auto points = absord::all_matchings(n);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (absord::flip_adjacent(points[i], points[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  if (out == "json") {
    json j;
    json nodes = json::array();
    for (const auto& x : points) nodes.push_back(x.str());
    j["nodes"] = std::move(nodes);
    json je = json::array();
    for (const auto& [a, b] : edges) je.push_back({a, b});
    j["edges"] = std::move(je);
    return j.dump(2) + "\n";
  }
  if (out == "dot") {
    std::ostringstream os;
    os << "graph flips {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < points.size(); ++i)
      os << "  n" << i << " [label=\"" << points[i].str() << "\"];\n";
    for (const auto& [a, b] : edges) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
  }
  std::ostringstream os;
  os << "matchings: " << points.size() << "  flip edges: " << edges.size() << "\n";
  for (const auto& [a, b] : edges)
    os << "  " << points[a].str() << " -- " << points[b].str() << "\n";
  return os.str();
}

int run_matchings(const MatchingsOpts& o) {
  if (o.n < 1) throw std::invalid_argument("--n must be positive");
  if (o.check_bijection) {
    auto points = absord::all_matchings(o.n);
    for (const auto& x : points) {
      if (absord::balanced_to_matching(absord::matching_to_balanced(x)) == x) continue;
      std::cout << "round-trip failed at " << x.str() << "\n";
      return 1;
    }
    auto balanced = absord::balanced_elements(2, o.n);
    for (const auto& w : balanced) {
      if (absord::matching_to_balanced(absord::balanced_to_matching(w)) == w) continue;
      std::cout << "round-trip failed at " << absord::to_string(absord::GroupElement(w))
                << "\n";
      return 1;
    }
    auto poly = rank_polynomial(absord::matchings_poset(o.n).poset);
    std::cout << "round-trip OK over " << points.size() << " matchings and "
              << balanced.size() << " balanced elements, rank polynomial " << poly.str()
              << "\n";
    return 0;
  }
  if (o.graph) return emit(o.output_file, flip_graph_text(o.n, o.out));
  RankedPoset p = o.balanced ? absord::balanced_poset(o.r, o.n).poset
                             : absord::matchings_poset(o.n).poset;
  if (o.out == "json") return emit(o.output_file, absord::poset_json(p));
  if (o.out == "dot") return emit(o.output_file, absord::poset_dot(p));
  return emit(o.output_file, absord::poset_table(p));
}

struct AlternatingOpts {
  std::string group;
  std::string s0;
  std::string out = "table";
  std::string output_file;
};

int run_alternating(const AlternatingOpts& o) {
  CoxeterDescriptor desc = CoxeterDescriptor::parse(o.group);
  GroupUniverse U = absord::enumerate_group(desc);
  int s0 = U.id(absord::parse_element(desc, o.s0));
  if (s0 < 0 || std::find(U.reflections.begin(), U.reflections.end(), s0) ==
                    U.reflections.end())
    throw std::invalid_argument("--s0 must name a reflection of " + desc.name());
  auto A = absord::make_alternating(U, s0);
  RankedPoset p = absord::alternating_poset(A);

  bool dichotomies = absord::length_dichotomies_hold(A);
  IntPolynomial poly = absord::alternating_rank_poly(A);
  auto quot = length_polynomial(U).divide_exact(IntPolynomial({1, 1}));
  bool poly_match = quot && *quot == poly;
  auto halves = absord::coset_poset(U, absord::subgroup_closure(U, {s0}));
  auto fold = absord::fold_map(A, halves);
  bool folds = absord::is_order_isomorphism(p, halves.poset, fold);
  bool ok = dichotomies && poly_match && folds;

  if (o.out == "dot") {
    int rc = emit(o.output_file, absord::poset_dot(p));
    if (rc != 0) return rc;
  } else if (o.out == "json") {
    json j;
    j["group"] = desc.name();
    j["s0"] = absord::to_string(U.elems[s0]);
    j["rank_polynomial"] = poly.str();
    j["group_polynomial_quotient"] = quot ? (*quot).str() : "none";
    j["length_dichotomies"] = dichotomies;
    j["folds_onto_coset_order"] = folds;
    j["poset"] = json::parse(absord::poset_json(p));
    int rc = emit(o.output_file, j.dump(2) + "\n");
    if (rc != 0) return rc;
  } else {
    std::ostringstream os;
    os << "group: " << desc.name() << "  s0: " << absord::to_string(U.elems[s0]) << "\n";
    os << "rank polynomial:          " << poly.str() << "\n";
    os << "group polynomial / (1+q): " << (quot ? (*quot).str() : std::string("none"))
       << (poly_match ? " (match)" : " (MISMATCH)") << "\n";
    os << "length dichotomies: " << (dichotomies ? "hold" : "FAIL") << "\n";
    os << "fold onto the coset order of {e, s0}: "
       << (folds ? "order isomorphism" : "FAIL") << "\n\n";
    os << absord::poset_table(p);
    int rc = emit(o.output_file, os.str());
    if (rc != 0) return rc;
  }
  if (!ok) {
    std::cerr << "witness: "
              << (!dichotomies     ? "a length dichotomy fails"
                  : !poly_match    ? "rank polynomial differs from the quotient"
                                   : "fold map is not an order isomorphism")
              << " for " << desc.name() << " with s0 = "
              << absord::to_string(U.elems[s0]) << "\n";
    return 1;
  }
  return 0;
}

struct ChainsOpts {
  int n_max = 5;
  bool alternating = false;
  std::string out = "table";
  std::string output_file;
};

int run_chains(const ChainsOpts& o) {
  if (o.n_max < 2 || o.n_max > 7)
    throw std::invalid_argument("--n-max must lie in 2..7");
  struct Row {
    int n, k;
    long long formula, brute;
  };
  std::vector<Row> rows;
  if (o.alternating) {
    for (int n = 3; n <= o.n_max; ++n) {
      GroupUniverse U = absord::enumerate_group(CoxeterDescriptor::A(n));
      auto A = absord::make_alternating(U, U.reflections.front());
      rows.push_back({n, 0, absord::alternating_chain_formula(n),
                      absord::count_maximal_chains(absord::alternating_poset(A))});
    }
  } else {
    for (int n = 2; n <= o.n_max; ++n) {
      GroupUniverse U = absord::enumerate_group(CoxeterDescriptor::A(n));
      for (int k = 1; k < n; ++k)
        rows.push_back({n, k, absord::tree_chain_formula(n, k),
                        absord::count_maximal_chains(absord::tuple_poset(U, k).poset)});
    }
  }
  bool all_match = true;
  for (const auto& r : rows) all_match = all_match && r.formula == r.brute;
  if (o.out == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      json jr;
      jr["n"] = r.n;
      if (!o.alternating) jr["k"] = r.k;
      jr["formula"] = r.formula;
      jr["brute_force"] = r.brute;
      jr["match"] = r.formula == r.brute;
      j.push_back(std::move(jr));
    }
    int rc = emit(o.output_file, j.dump(2) + "\n");
    if (rc != 0) return rc;
  } else {
    std::ostringstream os;
    os << "n     k     formula       brute-force   match\n";
    for (const auto& r : rows) {
      os << std::left << std::setw(6) << r.n << std::setw(6)
         << (o.alternating ? std::string("-") : std::to_string(r.k)) << std::setw(14)
         << r.formula << std::setw(14) << r.brute
         << (r.formula == r.brute ? "yes" : "NO") << "\n";
    }
    int rc = emit(o.output_file, os.str());
    if (rc != 0) return rc;
  }
  if (!all_match) {
    for (const auto& r : rows)
      if (r.formula != r.brute) {
        std::cerr << "witness: n=" << r.n << " k=" << r.k << " formula " << r.formula
                  << " vs brute force " << r.brute << "\n";
        break;
      }
    return 1;
  }
  return 0;
}

struct VerifyOpts {
  std::string what = "all";
  std::string level = "desk";
};

int run_verify(const VerifyOpts& o) {
  if (o.what != "all") throw std::invalid_argument("verify supports only 'all'");
  if (o.level != "desk") throw std::invalid_argument("--level supports only 'desk'");
  int failed = 0;
  auto results = absord::run_acceptance_suite([&](const absord::CheckResult& r) {
    if (r.pass) {
      std::cout << "PASS " << r.name << ": " << r.detail << std::endl;
    } else {
      std::cout << "FAIL " << r.name << ": " << r.detail << std::endl;
      ++failed;
    }
  });
  std::cout << (results.size() - failed) << " of " << results.size() << " checks passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}

// groups scanned by the open-question searches, smallest first
std::vector<CoxeterDescriptor> search_roster(long long max_order) {
  std::vector<CoxeterDescriptor> all;
  for (int n = 3; n <= 6; ++n) all.push_back(CoxeterDescriptor::A(n));
  for (int n = 2; n <= 4; ++n) all.push_back(CoxeterDescriptor::B(n));
  all.push_back(CoxeterDescriptor::D(4));
  for (int m = 3; m <= 8; ++m) all.push_back(CoxeterDescriptor::I2(m));
  all.push_back(CoxeterDescriptor::G(2, 2));
  all.push_back(CoxeterDescriptor::G(2, 3));
  all.push_back(CoxeterDescriptor::G(3, 2));
  all.push_back(CoxeterDescriptor::G(3, 3));
  std::vector<CoxeterDescriptor> kept;
  for (const auto& d : all)
    if (d.order() <= max_order) kept.push_back(d);
  std::stable_sort(kept.begin(), kept.end(),
                   [](const auto& a, const auto& b) { return a.order() < b.order(); });
  return kept;
}

std::string members_joined(const GroupUniverse& U, const std::vector<int>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += "  ";
    out += absord::to_string(U.elems[idx[i]]);
  }
  return out;
}

int run_search_modular(long long max_order) {
  int hits = 0;
  for (const auto& desc : search_roster(max_order)) {
    GroupUniverse U = absord::enumerate_group(desc);
    auto reps = absord::subgroup_conjugacy_reps(U, absord::all_subgroups(U));
    auto ctx = absord::full_context(U);
    std::vector<char> is_refl(U.size(), 0);
    for (int t : U.reflections) is_refl[t] = 1;
    std::vector<std::string> found(reps.size());
    std::vector<char> modular(reps.size(), 0);
    absord::parallel_for(static_cast<int>(reps.size()), [&](int i) {
      const auto& H = reps[i];
      if (!absord::check_modular(ctx, H).modular) return;
      modular[i] = 1;
      std::vector<int> refl_in_h;
      for (int h : H)
        if (is_refl[h]) refl_in_h.push_back(h);
      if (absord::subgroup_closure(U, refl_in_h) != H)
        found[i] = "  hit: order " + std::to_string(H.size()) +
                   " subgroup {" + members_joined(U, H) + "}";
    });
    int modular_count = 0, group_hits = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      modular_count += modular[i];
      group_hits += !found[i].empty();
    }
    std::cout << desc.name() << ": " << reps.size() << " subgroup classes, "
              << modular_count << " modular, "
              << (group_hits == 0 ? "all modular ones generated by reflections"
                                  : "non-reflection modular subgroups below")
              << std::endl;
    for (const auto& line : found)
      if (!line.empty()) std::cout << line << std::endl;
    hits += group_hits;
  }
  std::cout << (hits == 0 ? "no modular subgroup escapes its reflections"
                          : "found " + std::to_string(hits) +
                                " modular subgroups not generated by reflections")
            << std::endl;
  return 0;
}

int run_search_nongraded(long long max_order) {
  int hits = 0;
  for (const auto& desc : search_roster(max_order)) {
    GroupUniverse U = absord::enumerate_group(desc);
    auto reps = absord::subgroup_conjugacy_reps(U, absord::all_subgroups(U));
    std::vector<std::string> found(reps.size());
    absord::parallel_for(static_cast<int>(reps.size()), [&](int i) {
      auto cp = absord::coset_poset(U, reps[i]);
      auto info = absord::graded_info(cp.poset);
      if (info.graded) return;
      std::ostringstream os;
      os << "  hit: subgroup order " << reps[i].size() << ", " << cp.poset.size()
         << " cosets, rank polynomial " << rank_polynomial(cp.poset).str()
         << ", a maximal element below rank " << info.top_rank;
      found[i] = os.str();
    });
    int group_hits = 0;
    for (const auto& line : found) group_hits += !line.empty();
    std::cout << desc.name() << ": " << reps.size() << " coset orders, "
              << (group_hits == 0 ? "all graded" : "ungraded ones below") << std::endl;
    for (const auto& line : found)
      if (!line.empty()) std::cout << line << std::endl;
    hits += group_hits;
  }
  std::cout << (hits == 0 ? "every scanned coset order is graded"
                          : "found " + std::to_string(hits) + " ungraded coset orders")
            << std::endl;
  return 0;
}

int run_search_maximum(long long max_order) {
  int hits = 0;
  for (const auto& desc : search_roster(max_order)) {
    GroupUniverse U = absord::enumerate_group(desc);
    auto reps = absord::subgroup_conjugacy_reps(U, absord::all_subgroups(U));
    std::vector<std::string> found(reps.size());
    absord::parallel_for(static_cast<int>(reps.size()), [&](int i) {
      auto cp = absord::coset_poset(U, reps[i]);
      if (cp.poset.size() < 2) return;
      auto maximal = cp.poset.maximal_elements();
      if (maximal.size() != 1) return;
      std::ostringstream os;
      os << "  hit: subgroup order " << reps[i].size() << ", " << cp.poset.size()
         << " cosets, maximum " << cp.poset.labels[maximal.front()] << " at rank "
         << cp.poset.ranks[maximal.front()];
      found[i] = os.str();
    });
    int group_hits = 0;
    for (const auto& line : found) group_hits += !line.empty();
    std::cout << desc.name() << ": " << reps.size() << " coset orders, " << group_hits
              << " with a maximum" << std::endl;
    for (const auto& line : found)
      if (!line.empty()) std::cout << line << std::endl;
    hits += group_hits;
  }
  std::cout << "found " << hits << " coset orders with a maximum element" << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"absolute orders on finite reflection groups"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker thread budget")->check(CLI::PositiveNumber);

  auto out_choice = CLI::IsMember({"json", "dot", "table"});
  auto flat_choice = CLI::IsMember({"json", "table"});

  PosetOpts poset_opts;
  auto* poset_cmd = app.add_subcommand("poset", "absolute order of a group action");
  poset_cmd->add_option("--group", poset_opts.group, "group, e.g. S4, B3, D4, I2(5), G(2,3)")
      ->required();
  poset_cmd->add_option("--action", poset_opts.action, "self | cosets | tuples")
      ->check(CLI::IsMember({"self", "cosets", "tuples"}));
  poset_cmd->add_option("--subgroup", poset_opts.subgroup,
                        "semicolon-separated generators for --action cosets");
  poset_cmd->add_option("--k", poset_opts.k, "tuple length for --action tuples");
  poset_cmd->add_option("--out", poset_opts.out, "json | dot | table")->check(out_choice);
  poset_cmd->add_option("-o,--output", poset_opts.output_file, "write to file");

  PolyOpts poly_opts;
  auto* poly_cmd = app.add_subcommand("poly", "length generating polynomial");
  poly_cmd->add_option("--group", poly_opts.group, "group descriptor")->required();
  poly_cmd->add_option("--out", poly_opts.out, "json | table")->check(flat_choice);
  poly_cmd->add_option("-o,--output", poly_opts.output_file, "write to file");

  ModularOpts modular_opts;
  auto* modular_cmd = app.add_subcommand("modular", "coset minima and factorization");
  modular_cmd->add_option("--group", modular_opts.group, "ambient group")->required();
  modular_cmd
      ->add_option("--subgroup", modular_opts.subgroup,
                   "semicolon-separated generators, e.g. \"(1 2);(3 4)\"")
      ->required();
  modular_cmd->add_option("--out", modular_opts.out, "json | table")->check(flat_choice);
  modular_cmd->add_option("-o,--output", modular_opts.output_file, "write to file");

  QuasiOpts quasi_opts;
  auto* quasi_cmd = app.add_subcommand("quasi", "quasi-modularity via own lengths");
  quasi_cmd->add_option("--group", quasi_opts.group, "ambient group")->required();
  quasi_cmd->add_option("--subgroup", quasi_opts.subgroup, "subgroup generators");
  quasi_cmd->add_option("--own-reflections", quasi_opts.own_reflections,
                        "reflection set of the subgroup, ambient notation");
  quasi_cmd->add_option("--hyperoctahedral", quasi_opts.hyperoctahedral,
                        "embed the signed group on n letters into S(2n)");
  quasi_cmd->add_option("--out", quasi_opts.out, "json | table")->check(flat_choice);
  quasi_cmd->add_option("-o,--output", quasi_opts.output_file, "write to file");

  LatticeOpts lattice_opts;
  auto* lattice_cmd = app.add_subcommand("lattice", "geometric lattice of flats");
  lattice_cmd->add_option("--group", lattice_opts.group, "group descriptor")->required();
  lattice_cmd->add_option("--out", lattice_opts.out, "json | table")->check(flat_choice);
  lattice_cmd->add_option("-o,--output", lattice_opts.output_file, "write to file");

  MatchingsOpts matchings_opts;
  auto* matchings_cmd =
      app.add_subcommand("matchings", "flip order on perfect matchings");
  matchings_cmd->add_option("--n", matchings_opts.n, "letters per sign")->required();
  matchings_cmd->add_option("--r", matchings_opts.r, "colors for --balanced");
  matchings_cmd->add_flag("--balanced", matchings_opts.balanced,
                          "order on balanced wreath elements instead");
  matchings_cmd->add_flag("--graph", matchings_opts.graph,
                          "emit the flip graph rather than the order");
  matchings_cmd->add_flag("--check-bijection", matchings_opts.check_bijection,
                          "round-trip the matching/balanced correspondence");
  matchings_cmd->add_option("--out", matchings_opts.out, "json | dot | table")
      ->check(out_choice);
  matchings_cmd->add_option("-o,--output", matchings_opts.output_file, "write to file");

  AlternatingOpts alt_opts;
  auto* alt_cmd =
      app.add_subcommand("alternating", "order on the even-length subgroup");
  alt_cmd->alias("alt");
  alt_cmd->add_option("--group", alt_opts.group, "group descriptor")->required();
  alt_cmd->add_option("--s0", alt_opts.s0, "twisting reflection, e.g. \"(1 -1)\"")
      ->required();
  alt_cmd->add_option("--out", alt_opts.out, "json | dot | table")->check(out_choice);
  alt_cmd->add_option("-o,--output", alt_opts.output_file, "write to file");

  ChainsOpts chains_opts;
  auto* chains_cmd =
      app.add_subcommand("chains", "maximal chain counts against the tree formula");
  chains_cmd->add_option("--n-max", chains_opts.n_max, "largest symmetric group");
  chains_cmd->add_flag("--alternating", chains_opts.alternating,
                       "count chains in the even-length order instead");
  chains_cmd->add_option("--out", chains_opts.out, "json | table")->check(flat_choice);
  chains_cmd->add_option("-o,--output", chains_opts.output_file, "write to file");

  VerifyOpts verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("what", verify_opts.what, "suite selector (all)");
  verify_cmd->add_option("--level", verify_opts.level, "depth (desk)");

  long long max_order = 1152;
  auto* search_cmd = app.add_subcommand("search", "desk-scale open-question scans");
  search_cmd->require_subcommand(1);
  search_cmd->add_option("--max-order", max_order, "largest ambient group order");
  auto* s_modular = search_cmd->add_subcommand(
      "nonreflection-modular", "modular subgroups not generated by reflections");
  auto* s_nongraded =
      search_cmd->add_subcommand("nongraded", "coset orders that are not graded");
  auto* s_maximum =
      search_cmd->add_subcommand("maximum", "coset orders with a maximum element");

  for (auto* sub : {poset_cmd, poly_cmd, modular_cmd, quasi_cmd, lattice_cmd,
                    matchings_cmd, alt_cmd, chains_cmd, verify_cmd, search_cmd,
                    s_modular, s_nongraded, s_maximum})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    std::cerr << app.help();
    return 2;
  }

  absord::set_thread_budget(threads);

  try {
    if (app.got_subcommand(poset_cmd)) return run_poset(poset_opts);
    if (app.got_subcommand(poly_cmd)) return run_poly(poly_opts);
    if (app.got_subcommand(modular_cmd)) return run_modular(modular_opts);
    if (app.got_subcommand(quasi_cmd)) return run_quasi(quasi_opts);
    if (app.got_subcommand(lattice_cmd)) return run_lattice(lattice_opts);
    if (app.got_subcommand(matchings_cmd)) return run_matchings(matchings_opts);
    if (app.got_subcommand(alt_cmd)) return run_alternating(alt_opts);
    if (app.got_subcommand(chains_cmd)) return run_chains(chains_opts);
    if (app.got_subcommand(verify_cmd)) return run_verify(verify_opts);
    if (app.got_subcommand(search_cmd)) {
      if (s_modular->parsed()) return run_search_modular(max_order);
      if (s_nongraded->parsed()) return run_search_nongraded(max_order);
      if (s_maximum->parsed()) return run_search_maximum(max_order);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    for (auto* sub : app.get_subcommands()) {
      std::cerr << sub->help();
      return 2;
    }
    std::cerr << app.help();
    return 2;
  }
  return 0;
}
