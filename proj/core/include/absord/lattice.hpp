#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "absord/cosets.hpp"
#include "absord/group.hpp"
#include "absord/polynomial.hpp"
#include "absord/rootspace.hpp"

namespace absord {

// Geometric lattice of the subspaces spanned by subsets of roots, ordered
// by inclusion.  Each flat is identified with the set of roots it contains,
// stored as a bitmask over the root list.
struct FlatLattice {
  const GroupUniverse* U = nullptr;
  RootSystem roots;
  int ambient_dim = 0;
  int top_rank = 0;  // dimension of the top flat
  std::vector<Flat> flats;  // bottom first, then by (dim, basis)
  std::vector<std::uint32_t> masks;
  std::unordered_map<std::uint32_t, int> by_mask;
  std::vector<long long> mobius;    // mu(bottom, Y)
  std::vector<int> element_flat;    // flat of the moved space, per group element

  int size() const { return static_cast<int>(flats.size()); }
  int bottom() const { return 0; }
  int top() const;
  int rank(int f) const { return flats[f].dim(); }
  bool leq(int a, int b) const;
  int meet(int a, int b) const;
  int join(int a, int b) const;
};

FlatLattice build_flat_lattice(const GroupUniverse& U);

// number of group elements whose moved space equals each flat
std::vector<long long> moved_space_counts(const FlatLattice& L);

// sum over flats of mu(bottom, Y) q^(top_rank - rank Y)
IntPolynomial characteristic_polynomial(const FlatLattice& L);

// the same polynomial for the lower interval [bottom, z]
IntPolynomial interval_characteristic_polynomial(const FlatLattice& L, int z);

// rank(Y) + rank(Z) == rank(Y meet Z) + rank(Y join Z) for every Y
bool is_modular_flat(const FlatLattice& L, int z);

// equivalent test: the subspace intersection with every flat is again a flat
bool modular_via_intersections(const FlatLattice& L, int z);

// sum of q^len(w) over elements whose moved space meets z at the bottom
IntPolynomial complement_length_poly(const FlatLattice& L, int z);

// chi_L == chi_[bottom,z] * (sum over Y with Y meet z = bottom of
// mu(bottom,Y) q^(top_rank - rank Y - rank z))
bool lattice_factorization_holds(const FlatLattice& L, int z);

// all w whose moved space lies inside the flat; this is the parabolic
// subgroup attached to it
std::vector<int> flat_parabolic_members(const FlatLattice& L, int z);

// the flat spanned by the moved spaces of the given subgroup
int flat_of_subgroup(const FlatLattice& L, const std::vector<int>& members);

// a reflection subgroup is parabolic when it contains every reflection
// whose root lies in its span
bool is_parabolic_subgroup(const FlatLattice& L, const std::vector<int>& members);

// Cross-checks, for the parabolic subgroup H of the flat z, that four
// modularity criteria agree and that the two coset-minimum tests hold
// elementwise.
struct ModularEquivalenceReport {
  int flat = -1;
  bool subgroup_modular = false;
  bool flat_modular = false;
  bool group_factorization = false;    // ambient length polynomials
  bool lattice_factorization = false;  // characteristic polynomials
  bool minimum_iff_trivial_intersection = false;
  bool minimal_iff_trivial_meet = false;
  bool consistent() const;
};

ModularEquivalenceReport check_modular_equivalence(const FlatLattice& L, int z);

}  // namespace absord
