#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace absord {

// Permutation of {1..n}; img_[i] is the 0-based image of point i.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  static Perm transposition(int n, int a, int b);  // 0-based points

  int n() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i]; }
  Perm compose(const Perm& o) const;  // this after o
  Perm inverse() const;
  bool is_identity() const;
  int num_cycles() const;  // fixed points included
  // cycles on {0..n-1}, each rotated to start at its least point, sorted
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;
  const std::vector<int>& images() const { return img_; }

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

// Signed permutation of {±1..±n}: w(-i) = -w(i); img_[i-1] = w(i) in ±{1..n}.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images);
  static SignedPerm identity(int n);

  int n() const { return static_cast<int>(img_.size()); }
  int apply(int signed_pt) const;
  SignedPerm compose(const SignedPerm& o) const;
  SignedPerm inverse() const;
  bool is_identity() const;
  int sign_changes() const;  // #{i > 0 : w(i) < 0}
  Perm underlying() const;   // forget signs
  // number of cycles of the underlying permutation whose sign product is +1
  int num_balanced_cycles() const;
  const std::vector<int>& images() const { return img_; }

  auto operator<=>(const SignedPerm&) const = default;

 private:
  std::vector<int> img_;
};

// Element of the wreath product Z_r wr S_n, written [colors; perm]: the color
// of letter j is colors_[j-1] in Z_r, and the element acts on a signed/colored
// point (gamma, a) by (gamma + colors_[perm(a)], perm(a)).
class ColoredPerm {
 public:
  ColoredPerm() = default;
  ColoredPerm(int r, std::vector<int> colors, Perm perm);
  static ColoredPerm identity(int r, int n);
  static ColoredPerm from_signed(const SignedPerm& w);  // r = 2

  int r() const { return r_; }
  int n() const { return perm_.n(); }
  const std::vector<int>& colors() const { return colors_; }
  const Perm& perm() const { return perm_; }
  ColoredPerm compose(const ColoredPerm& o) const;
  ColoredPerm inverse() const;
  bool is_identity() const;
  SignedPerm to_signed() const;  // requires r == 2
  // cycle color sum = sum of colors over the letters of a perm cycle
  bool cycle_balanced(const std::vector<int>& cycle) const;
  bool balanced() const;           // every cycle balanced
  int num_balanced_cycles() const;

  auto operator<=>(const ColoredPerm&) const = default;

 private:
  int r_ = 1;
  std::vector<int> colors_;
  Perm perm_;
};

// Element of the dihedral group of order 2m: r^k or s r^k with s r s = r^-1.
class DihedralElem {
 public:
  DihedralElem() = default;
  DihedralElem(int m, bool reflection, int k);
  static DihedralElem identity(int m);

  int m() const { return m_; }
  bool reflection() const { return refl_; }
  int k() const { return k_; }
  DihedralElem compose(const DihedralElem& o) const;
  DihedralElem inverse() const;
  bool is_identity() const { return !refl_ && k_ == 0; }

  auto operator<=>(const DihedralElem&) const = default;

 private:
  int m_ = 1;
  bool refl_ = false;
  int k_ = 0;
};

using GroupElement = std::variant<Perm, SignedPerm, ColoredPerm, DihedralElem>;

GroupElement compose(const GroupElement& u, const GroupElement& v);
GroupElement inverse(const GroupElement& w);
bool is_identity(const GroupElement& w);

// Flat integer encoding, unique per element; used for hashing and ordering.
std::vector<int> element_key(const GroupElement& w);
// One-line form used for deterministic representative tie-breaks.
std::vector<int> one_line_key(const GroupElement& w);
bool one_line_less(const GroupElement& a, const GroupElement& b);

struct ElemHash {
  size_t operator()(const GroupElement& w) const;
};

// Cycle notation: "(1 2)(3 4)" for permutations; signed permutations print
// mirror-paired cycles doubled, "((1 -2))" = (1 -2)(-1 2), and self-mirrored
// cycles plainly, "(1 -1)". Wreath elements print "[c1,...,cn; p1 ... pn]",
// dihedral elements "rK" / "sK". The identity prints "e".
std::string to_string(const GroupElement& w);

}  // namespace absord
