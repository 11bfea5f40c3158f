#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "absord/coxeter.hpp"
#include "absord/elements.hpp"

namespace absord {

using Rat = boost::rational<long long>;
using Vec = std::vector<Rat>;
using Matrix = std::vector<Vec>;  // rows

std::string rat_str(const Rat& x);  // "p/q", or "p" when q == 1
Rat parse_rat(const std::string& text);

// A linear subspace of Q^n in canonical form: reduced row echelon basis with
// unit pivots, rows ordered by pivot column. Equal subspaces compare equal.
struct Flat {
  int ambient_dim = 0;
  Matrix basis;  // RREF rows; empty for the zero subspace

  int dim() const { return static_cast<int>(basis.size()); }
  static Flat zero(int n) { return Flat{n, {}}; }
  bool operator==(const Flat&) const = default;
  bool operator<(const Flat& o) const;
  std::string key() const;  // serialized canonical form
};

Flat span(int ambient_dim, const Matrix& vectors);
bool flat_contains(const Flat& f, const Vec& v);
bool flat_subset(const Flat& a, const Flat& b);
Flat flat_sum(const Flat& a, const Flat& b);
Flat flat_intersection(const Flat& a, const Flat& b);  // Zassenhaus
int matrix_rank(const Matrix& rows);

// Positive roots paired with their reflections, index-aligned. Sign
// normalization: first nonzero coordinate positive for A and B, last nonzero
// coordinate positive for D.
struct RootSystem {
  CoxeterDescriptor desc;
  std::vector<Vec> roots;
  std::vector<GroupElement> root_reflections;
};

// Defined for A/B/D; I2(3) and I2(4) are rerouted through their isomorphic
// copies A(3) and B(2). Other parameters are unsupported.
RootSystem root_system(const CoxeterDescriptor& desc);

// The reflection representation matrix of w acting on Q^rank.
Matrix reflection_matrix(const CoxeterDescriptor& desc, const GroupElement& w);

// Moved space: column space of (M_w - I); fixed space: its kernel.
Flat moved_space(const CoxeterDescriptor& desc, const GroupElement& w);
Flat fixed_space(const CoxeterDescriptor& desc, const GroupElement& w);

// Are the given roots linearly independent?
bool carter_independent(const std::vector<Vec>& roots, int ambient_dim);

// Translate I2(3)/I2(4) data to the isomorphic A(3)/B(2) group; identity on
// A/B/D. Throws for unsupported descriptors.
std::pair<CoxeterDescriptor, GroupElement> crystallographic_form(const CoxeterDescriptor& desc,
                                                                 const GroupElement& w);

}  // namespace absord
