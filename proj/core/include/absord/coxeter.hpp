#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "absord/elements.hpp"

namespace absord {

enum class Family { A, B, D, I2, G };

// Families:
//   A, rank n  : symmetric group S_n on {1..n} (Perm)
//   B, rank n  : signed permutations of {±1..±n} (SignedPerm)
//   D, rank n  : signed permutations with an even number of sign changes
//   I2, m      : dihedral group of order 2m (DihedralElem)
//   G, (r, n)  : wreath product Z_r wr S_n (ColoredPerm); r = 1 is S_n and
//                r = 2 coincides with B as a group
struct CoxeterDescriptor {
  Family family = Family::A;
  int rank = 1;         // number of letters for A/B/D/G
  int color_order = 1;  // r for family G
  int dihedral_m = 0;   // m for family I2

  static CoxeterDescriptor A(int n);
  static CoxeterDescriptor B(int n);
  static CoxeterDescriptor D(int n);
  static CoxeterDescriptor I2(int m);
  static CoxeterDescriptor G(int r, int n);
  // "S4" / "A4" -> A(4), "B3", "D4", "I2(5)", "G(2,3)"
  static CoxeterDescriptor parse(std::string_view text);

  // exponents e_1..e_d with prod (1 + e_i q) the length generating function;
  // defined for the Coxeter families A, B, D, I2
  std::vector<int> exponents() const;
  long long order() const;
  int coxeter_rank() const;  // A: rank-1, B/D: rank, I2: 2, G: rank
  GroupElement identity_element() const;
  bool contains(const GroupElement& w) const;
  std::string name() const;

  bool operator==(const CoxeterDescriptor&) const = default;
};

struct ReflectionSet {
  enum class Kind { coxeter, pseudo };
  Kind kind = Kind::coxeter;
  std::vector<GroupElement> elements;
};

// Reflections for A/B/D/I2, pseudoreflections (hyperplane-fixing elements,
// including the diagonal ones) for family G.
ReflectionSet reflections(const CoxeterDescriptor& desc);

// Generators s_1..s_d of a simple system (A/B/D/I2 only).
std::vector<GroupElement> simple_generators(const CoxeterDescriptor& desc);

// Minimum number of (pseudo)reflections multiplying to w, by closed form:
// A/B/D/G count cycles balanced by color sum, I2 is 0/1/2.
int absolute_length(const CoxeterDescriptor& desc, const GroupElement& w);

// Parse cycle notation in the context of desc. For signed families the mirror
// images are implied: "(1 2)" and "((1 2))" both denote (1 2)(-1 -2), and
// "(1 -1)" the sign flip. Wreath elements use "[c1,...,cn; p1 ... pn]",
// dihedral ones "e" / "rK" / "sK".
GroupElement parse_element(const CoxeterDescriptor& desc, std::string_view text);

}  // namespace absord
