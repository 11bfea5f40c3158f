#include "absord/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace absord {

int FlatLattice::top() const {
  for (int f = size() - 1; f >= 0; --f)
    if (rank(f) == top_rank) return f;
  throw std::logic_error("lattice has no top flat");
}

bool FlatLattice::leq(int a, int b) const { return (masks[a] & ~masks[b]) == 0; }

int FlatLattice::meet(int a, int b) const { return by_mask.at(masks[a] & masks[b]); }

int FlatLattice::join(int a, int b) const {
  Flat sum = flat_sum(flats[a], flats[b]);
  std::uint32_t mask = 0;
  for (size_t i = 0; i < roots.roots.size(); ++i)
    if (flat_contains(sum, roots.roots[i])) mask |= std::uint32_t(1) << i;
  return by_mask.at(mask);
}

FlatLattice build_flat_lattice(const GroupUniverse& U) {
  FlatLattice L;
  L.U = &U;
  L.roots = root_system(U.desc);
  if (L.roots.roots.size() > 32)
    throw std::invalid_argument("root system too large for mask-based lattice");
  L.ambient_dim = static_cast<int>(L.roots.roots[0].size());
  L.top_rank = U.desc.coxeter_rank();

  auto mask_of = [&](const Flat& f) {
    std::uint32_t mask = 0;
    for (size_t i = 0; i < L.roots.roots.size(); ++i)
      if (flat_contains(f, L.roots.roots[i])) mask |= std::uint32_t(1) << i;
    return mask;
  };

  std::unordered_map<std::uint32_t, Flat> found;
  std::vector<std::uint32_t> frontier{0};
  found.emplace(0, Flat::zero(L.ambient_dim));
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t cur : frontier) {
      const Flat base = found.at(cur);
      for (size_t i = 0; i < L.roots.roots.size(); ++i) {
        if (cur & (std::uint32_t(1) << i)) continue;
        Matrix gens = base.basis;
        gens.push_back(L.roots.roots[i]);
        Flat bigger = span(L.ambient_dim, gens);
        std::uint32_t mask = mask_of(bigger);
        if (found.emplace(mask, bigger).second) next.push_back(mask);
      }
    }
    frontier = std::move(next);
  }

  for (auto& [mask, flat] : found) {
    L.masks.push_back(mask);
    L.flats.push_back(flat);
  }
  std::vector<int> order(L.flats.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return L.flats[a] < L.flats[b]; });
  std::vector<Flat> flats;
  std::vector<std::uint32_t> masks;
  for (int i : order) {
    flats.push_back(std::move(L.flats[i]));
    masks.push_back(L.masks[i]);
  }
  L.flats = std::move(flats);
  L.masks = std::move(masks);
  for (int f = 0; f < L.size(); ++f) L.by_mask[L.masks[f]] = f;
  if (L.rank(L.size() - 1) != L.top_rank)
    throw std::logic_error("span of all roots has unexpected dimension");

  L.mobius.assign(L.size(), 0);
  L.mobius[0] = 1;
  for (int f = 1; f < L.size(); ++f) {
    long long total = 0;
    for (int g = 0; g < f; ++g)
      if (L.leq(g, f)) total += L.mobius[g];
    L.mobius[f] = -total;
  }

  L.element_flat.reserve(U.elems.size());
  for (const GroupElement& w : U.elems) {
    Flat moved = moved_space(U.desc, w);
    auto it = L.by_mask.find(mask_of(moved));
    if (it == L.by_mask.end() || !(L.flats[it->second] == moved))
      throw std::logic_error("moved space is not spanned by the roots it contains");
    L.element_flat.push_back(it->second);
  }
  return L;
}

std::vector<long long> moved_space_counts(const FlatLattice& L) {
  std::vector<long long> counts(L.size(), 0);
  for (int f : L.element_flat) ++counts[f];
  return counts;
}

IntPolynomial characteristic_polynomial(const FlatLattice& L) {
  std::vector<long long> coeffs(L.top_rank + 1, 0);
  for (int f = 0; f < L.size(); ++f) coeffs[L.top_rank - L.rank(f)] += L.mobius[f];
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial interval_characteristic_polynomial(const FlatLattice& L, int z) {
  std::vector<long long> coeffs(L.rank(z) + 1, 0);
  for (int f = 0; f < L.size(); ++f)
    if (L.leq(f, z)) coeffs[L.rank(z) - L.rank(f)] += L.mobius[f];
  return IntPolynomial(std::move(coeffs));
}

bool is_modular_flat(const FlatLattice& L, int z) {
  for (int y = 0; y < L.size(); ++y)
    if (L.rank(y) + L.rank(z) != L.rank(L.meet(y, z)) + L.rank(L.join(y, z)))
      return false;
  return true;
}

bool modular_via_intersections(const FlatLattice& L, int z) {
  for (int y = 0; y < L.size(); ++y) {
    Flat inter = flat_intersection(L.flats[y], L.flats[z]);
    if (!(L.flats[L.meet(y, z)] == inter)) return false;
  }
  return true;
}

IntPolynomial complement_length_poly(const FlatLattice& L, int z) {
  std::vector<int> lengths;
  for (size_t w = 0; w < L.U->elems.size(); ++w)
    if ((L.masks[L.element_flat[w]] & L.masks[z]) == 0)
      lengths.push_back(L.U->lengths[w]);
  return IntPolynomial::from_counts(lengths);
}

bool lattice_factorization_holds(const FlatLattice& L, int z) {
  std::vector<long long> coeffs(L.top_rank + 1, 0);
  for (int y = 0; y < L.size(); ++y) {
    if ((L.masks[y] & L.masks[z]) != 0) continue;
    int exp = L.top_rank - L.rank(y) - L.rank(z);
    if (exp < 0) return false;
    coeffs[exp] += L.mobius[y];
  }
  IntPolynomial complement(std::move(coeffs));
  return characteristic_polynomial(L) ==
         interval_characteristic_polynomial(L, z) * complement;
}

std::vector<int> flat_parabolic_members(const FlatLattice& L, int z) {
  std::vector<int> members;
  for (size_t w = 0; w < L.U->elems.size(); ++w)
    if (L.leq(L.element_flat[w], z)) members.push_back(static_cast<int>(w));
  return members;
}

int flat_of_subgroup(const FlatLattice& L, const std::vector<int>& members) {
  int span_flat = L.bottom();
  for (int w : members) span_flat = L.join(span_flat, L.element_flat[w]);
  return span_flat;
}

bool is_parabolic_subgroup(const FlatLattice& L, const std::vector<int>& members) {
  int z = flat_of_subgroup(L, members);
  std::vector<int> parabolic = flat_parabolic_members(L, z);
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  return sorted == parabolic;
}

bool ModularEquivalenceReport::consistent() const {
  return subgroup_modular == flat_modular && subgroup_modular == group_factorization &&
         subgroup_modular == lattice_factorization && minimum_iff_trivial_intersection &&
         minimal_iff_trivial_meet;
}

ModularEquivalenceReport check_modular_equivalence(const FlatLattice& L, int z) {
  const GroupUniverse& U = *L.U;
  GroupContext G = full_context(U);
  std::vector<int> subgroup = flat_parabolic_members(L, z);

  ModularEquivalenceReport report;
  report.flat = z;
  ModularityReport mod = check_modular(G, subgroup);
  report.subgroup_modular = mod.modular;
  report.group_factorization = mod.factorization_holds;
  report.flat_modular = is_modular_flat(L, z);
  report.lattice_factorization = lattice_factorization_holds(L, z);

  report.minimum_iff_trivial_intersection = true;
  report.minimal_iff_trivial_meet = true;
  for (size_t c = 0; c < mod.cosets.size(); ++c) {
    const auto& coset = mod.cosets[c];
    for (int w : coset) {
      bool is_min = mod.minima[c] && *mod.minima[c] == w;
      Flat inter = flat_intersection(L.flats[L.element_flat[w]], L.flats[z]);
      if (is_min != (inter.dim() == 0)) report.minimum_iff_trivial_intersection = false;

      bool minimal = true;
      for (int u : coset)
        if (u != w && absolute_leq(G, u, w)) {
          minimal = false;
          break;
        }
      bool trivial_meet = L.meet(L.element_flat[w], z) == L.bottom();
      if (minimal != trivial_meet) report.minimal_iff_trivial_meet = false;
    }
  }
  return report;
}

}  // namespace absord
