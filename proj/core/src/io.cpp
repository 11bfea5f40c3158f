#include "absord/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "absord/elements.hpp"

namespace absord {

namespace {

using nlohmann::json;

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

json poset_to_json(const RankedPoset& p) {
  json j;
  j["size"] = p.size();
  j["rank_polynomial"] = rank_polynomial(p).str();
  json elems = json::array();
  for (int i = 0; i < p.size(); ++i)
    elems.push_back({{"id", i}, {"label", p.labels[i]}, {"rank", p.ranks[i]}});
  j["elements"] = std::move(elems);
  json covers = json::array();
  for (const auto& [lo, hi] : p.covers) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  return j;
}

json flat_to_json(const Flat& f) {
  json rows = json::array();
  for (const auto& row : f.basis) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rat_str(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string labels_joined(const GroupUniverse& U, const std::vector<int>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += "  ";
    out += to_string(U.elems[idx[i]]);
  }
  return out;
}

}  // namespace

std::string flat_str(const Flat& f) {
  if (f.dim() == 0) return "{0}";
  std::string out = "span{";
  for (std::size_t i = 0; i < f.basis.size(); ++i) {
    out += i ? ",(" : "(";
    for (int j = 0; j < f.ambient_dim; ++j) {
      if (j) out += ",";
      out += rat_str(f.basis[i][j]);
    }
    out += ")";
  }
  out += "}";
  return out;
}

std::string poset_json(const RankedPoset& p) { return poset_to_json(p).dump(2) + "\n"; }

std::string poset_dot(const RankedPoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << escape_dot(p.labels[i]) << "\"];\n";
  int top = 0;
  for (int r : p.ranks) top = std::max(top, r);
  for (int r = 0; r <= top; ++r) {
    os << "  { rank=same;";
    for (int i = 0; i < p.size(); ++i)
      if (p.ranks[i] == r) os << " n" << i << ";";
    os << " }\n";
  }
  for (const auto& [lo, hi] : p.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string poset_table(const RankedPoset& p) {
  std::ostringstream os;
  os << "elements: " << p.size() << "\n";
  os << "rank polynomial: " << rank_polynomial(p).str() << "\n";
  std::size_t w = 5;
  for (const auto& l : p.labels) w = std::max(w, l.size());
  os << std::left << std::setw(6) << "id" << std::setw(6) << "rank"
     << "label\n";
  for (int i = 0; i < p.size(); ++i)
    os << std::left << std::setw(6) << i << std::setw(6) << p.ranks[i]
       << p.labels[i] << "\n";
  os << "covers:\n";
  for (const auto& [lo, hi] : p.covers)
    os << "  " << p.labels[lo] << " < " << p.labels[hi] << "\n";
  return os.str();
}

std::string modularity_json(const GroupUniverse& U, const ModularityReport& r) {
  json j;
  j["modular"] = r.modular;
  j["factorization_holds"] = r.factorization_holds;
  j["group_polynomial"] = r.group_poly.str();
  j["subgroup_polynomial"] = r.subgroup_poly.str();
  j["quotient_polynomial"] = r.quotient_poly.str();
  j["coset_count"] = r.cosets.size();
  json cosets = json::array();
  for (std::size_t c = 0; c < r.cosets.size(); ++c) {
    json jc;
    json members = json::array();
    for (int m : r.cosets[c]) members.push_back(to_string(U.elems[m]));
    jc["members"] = std::move(members);
    if (r.minima[c])
      jc["minimum"] = to_string(U.elems[*r.minima[c]]);
    else
      jc["minimum"] = nullptr;
    json reps = json::array();
    for (int m : r.min_length_reps[c]) reps.push_back(to_string(U.elems[m]));
    jc["min_length_reps"] = std::move(reps);
    cosets.push_back(std::move(jc));
  }
  j["cosets"] = std::move(cosets);
  if (r.witness_coset)
    j["witness_coset"] = *r.witness_coset;
  else
    j["witness_coset"] = nullptr;
  return j.dump(2) + "\n";
}

std::string modularity_table(const GroupUniverse& U, const ModularityReport& r) {
  std::ostringstream os;
  os << "modular: " << (r.modular ? "yes" : "no") << "\n";
  os << "group polynomial:    " << r.group_poly.str() << "\n";
  os << "subgroup polynomial: " << r.subgroup_poly.str() << "\n";
  os << "quotient polynomial: " << r.quotient_poly.str() << "\n";
  os << "factorization " << (r.factorization_holds ? "holds" : "fails") << "\n";
  os << "cosets: " << r.cosets.size() << "\n";
  for (std::size_t c = 0; c < r.cosets.size(); ++c) {
    os << "  [" << c << "] ";
    if (r.minima[c])
      os << "minimum " << to_string(U.elems[*r.minima[c]]);
    else
      os << "no minimum, shortest: " << labels_joined(U, r.min_length_reps[c]);
    os << " | " << labels_joined(U, r.cosets[c]) << "\n";
  }
  if (r.witness_coset)
    os << "first coset without a minimum: [" << *r.witness_coset << "]\n";
  return os.str();
}

std::string quasi_json(const QuasiModularityReport& r) {
  json j;
  j["quasi_modular"] = r.quasi_modular;
  j["group_polynomial"] = r.group_poly.str();
  j["subgroup_polynomial"] = r.subgroup_own_poly.str();
  j["quotient_polynomial"] = r.quotient_poly.str();
  return j.dump(2) + "\n";
}

std::string quasi_table(const QuasiModularityReport& r) {
  std::ostringstream os;
  os << "quasi-modular: " << (r.quasi_modular ? "yes" : "no") << "\n";
  os << "group polynomial:            " << r.group_poly.str() << "\n";
  os << "subgroup polynomial (own):   " << r.subgroup_own_poly.str() << "\n";
  os << "quotient polynomial:         " << r.quotient_poly.str() << "\n";
  return os.str();
}

std::string lattice_json(const FlatLattice& L) {
  json j;
  j["ambient_dimension"] = L.ambient_dim;
  j["rank"] = L.top_rank;
  j["flat_count"] = L.size();
  j["characteristic_polynomial"] = characteristic_polynomial(L).str();
  json flats = json::array();
  for (int f = 0; f < L.size(); ++f) {
    json jf;
    jf["id"] = f;
    jf["rank"] = L.rank(f);
    jf["mobius"] = L.mobius[f];
    jf["modular"] = is_modular_flat(L, f);
    jf["basis"] = flat_to_json(L.flats[f]);
    json roots = json::array();
    for (int t = 0; t < static_cast<int>(L.roots.roots.size()); ++t)
      if (L.masks[f] >> t & 1u) roots.push_back(t);
    jf["roots"] = std::move(roots);
    flats.push_back(std::move(jf));
  }
  j["flats"] = std::move(flats);
  return j.dump(2) + "\n";
}

std::string lattice_table(const FlatLattice& L) {
  std::ostringstream os;
  os << "ambient dimension: " << L.ambient_dim << "  rank: " << L.top_rank
     << "  flats: " << L.size() << "\n";
  os << "characteristic polynomial: " << characteristic_polynomial(L).str()
     << "\n";
  os << std::left << std::setw(5) << "id" << std::setw(6) << "rank"
     << std::setw(8) << "mobius" << std::setw(9) << "modular"
     << "flat\n";
  for (int f = 0; f < L.size(); ++f)
    os << std::left << std::setw(5) << f << std::setw(6) << L.rank(f)
       << std::setw(8) << L.mobius[f] << std::setw(9)
       << (is_modular_flat(L, f) ? "yes" : "no") << flat_str(L.flats[f])
       << "\n";
  return os.str();
}

}  // namespace absord
