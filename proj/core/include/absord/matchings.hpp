#pragma once

#include <string>
#include <vector>

#include "absord/cosets.hpp"
#include "absord/elements.hpp"
#include "absord/group.hpp"
#include "absord/poset.hpp"

namespace absord {

// Perfect matching of {1,-1,...,n,-n}.  Points are stored by position in
// the order 1 < -1 < 2 < -2 < ... which is also the canonical text order.
struct Matching {
  int n = 0;
  std::vector<int> partner;  // position -> position

  static Matching base(int n);  // arcs {-i, i}
  static int pos_of(int point);
  static int point_at(int pos);
  int image(int point) const;  // matched partner of a signed point
  bool operator==(const Matching& o) const = default;
  std::string str() const;  // "{1,-2}{-1,2}"
};

Matching parse_matching(const std::string& text, int n);
std::vector<Matching> all_matchings(int n);

// neighbors in the flip graph: replace two arcs by one of the two other
// pairings of their endpoints
std::vector<Matching> flip_neighbors(const Matching& x);
bool flip_adjacent(const Matching& x, const Matching& y);

// orientation map onto balanced signed permutations, and its inverse
ColoredPerm matching_to_balanced(const Matching& x);
Matching balanced_to_matching(const ColoredPerm& w);

struct MatchingPoset {
  std::vector<Matching> points;
  RankedPoset poset;
};

// geodesic order on the flip graph, based at the matching of arcs {-i, i}
MatchingPoset matchings_poset(int n);

// balanced elements of the wreath product of Z_r by S_n
std::vector<ColoredPerm> balanced_elements(int r, int n);
std::vector<ColoredPerm> balanced_reflections(int r, int n);
int balanced_length(const ColoredPerm& w);

struct BalancedPoset {
  std::vector<ColoredPerm> points;
  RankedPoset poset;
};

// order generated by left multiplication with balanced reflections that
// raise the length by one
BalancedPoset balanced_poset(int r, int n);

// checks for the color-forgetting projection onto the symmetric group
struct ProjectionReport {
  bool rank_preserving = false;    // poset rank equals the projected length
  bool fibers_match = false;       // fiber over pi has r^len(pi) elements
  bool covers_project = false;     // covers map to covers
  bool unique_lifts = false;       // each cover below the projection lifts once
  bool intervals_isomorphic = false;  // maximal intervals map isomorphically
  int maximal_interval_count = 0;
  bool all() const {
    return rank_preserving && fibers_match && covers_project && unique_lifts &&
           intervals_isomorphic;
  }
};

ProjectionReport check_balanced_projection(int r, int n);

// natural embedding into the symmetric group on {1,-1,...,n,-n}:
// +i -> letter 2i-1, -i -> letter 2i
Perm embed_signed_in_symmetric(const SignedPerm& w);

// member indices of the embedded hyperoctahedral group inside the
// universe of the symmetric group on 2n letters
std::vector<int> embedded_hyperoctahedral(const GroupUniverse& s2n, int n);

struct HyperoctahedralReport {
  QuasiModularityReport quasi;
  bool modular = false;        // expected false for n >= 2
  int witness_length = 0;      // ambient length of an embedded long cycle
  int factor_degree_bound = 0; // degree the subgroup factor would need
  bool witness_exceeds_bound() const { return witness_length > factor_degree_bound; }
};

// the stabilizer of the base matching is quasi-modular but not modular
HyperoctahedralReport check_hyperoctahedral(const GroupUniverse& s2n, int n);

}  // namespace absord
