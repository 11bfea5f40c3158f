#include "absord/rootspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace absord {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// boost::rational mixed-type ==/!= recurses under C++20 rewritten candidates
// (fixed upstream after 1.74), so zero and sign tests go through the
// numerator; the invariant den > 0 makes that exact.
bool is_zero(const Rat& x) { return x.numerator() == 0; }

// in-place reduced row echelon form; returns pivot columns
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int cols = static_cast<int>(m[0].size());
  size_t row = 0;
  for (int col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat lead = m[row][col];
    for (int j = 0; j < cols; ++j) m[row][j] /= lead;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || is_zero(m[i][col])) continue;
      Rat f = m[i][col];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

std::string rat_str(const Rat& x) {
  std::string s = std::to_string(x.numerator());
  if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
  return s;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(text));
  return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

bool Flat::operator<(const Flat& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return basis < o.basis;
}

std::string Flat::key() const {
  std::string s = std::to_string(ambient_dim) + ":";
  for (const Vec& row : basis) {
    for (const Rat& x : row) s += rat_str(x) + ",";
    s += ";";
  }
  return s;
}

Flat span(int ambient_dim, const Matrix& vectors) {
  Matrix m;
  for (const Vec& v : vectors) {
    require(static_cast<int>(v.size()) == ambient_dim, "span: vector dimension mismatch");
    bool zero = std::all_of(v.begin(), v.end(), is_zero);
    if (!zero) m.push_back(v);
  }
  rref(m);
  return Flat{ambient_dim, std::move(m)};
}

bool flat_contains(const Flat& f, const Vec& v) {
  require(static_cast<int>(v.size()) == f.ambient_dim, "flat_contains: dimension mismatch");
  Vec rem = v;
  for (const Vec& row : f.basis) {
    int pivot = 0;
    while (is_zero(row[pivot])) ++pivot;
    if (is_zero(rem[pivot])) continue;
    Rat f0 = rem[pivot];
    for (int j = 0; j < f.ambient_dim; ++j) rem[j] -= f0 * row[j];
  }
  return std::all_of(rem.begin(), rem.end(), is_zero);
}

bool flat_subset(const Flat& a, const Flat& b) {
  for (const Vec& row : a.basis)
    if (!flat_contains(b, row)) return false;
  return true;
}

Flat flat_sum(const Flat& a, const Flat& b) {
  require(a.ambient_dim == b.ambient_dim, "flat_sum: ambient mismatch");
  Matrix m = a.basis;
  m.insert(m.end(), b.basis.begin(), b.basis.end());
  return span(a.ambient_dim, m);
}

Flat flat_intersection(const Flat& a, const Flat& b) {
  require(a.ambient_dim == b.ambient_dim, "flat_intersection: ambient mismatch");
  int n = a.ambient_dim;
  // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry the
  // intersection in their right half
  Matrix m;
  for (const Vec& u : a.basis) {
    Vec row(2 * n);
    for (int j = 0; j < n; ++j) row[j] = row[n + j] = u[j];
    m.push_back(std::move(row));
  }
  for (const Vec& v : b.basis) {
    Vec row(2 * n);
    for (int j = 0; j < n; ++j) row[j] = v[j];
    m.push_back(std::move(row));
  }
  rref(m);
  Matrix inter;
  for (const Vec& row : m) {
    bool left_zero = true;
    for (int j = 0; j < n; ++j)
      if (!is_zero(row[j])) {
        left_zero = false;
        break;
      }
    if (left_zero) inter.emplace_back(row.begin() + n, row.end());
  }
  return span(n, inter);
}

int matrix_rank(const Matrix& rows) {
  Matrix m = rows;
  rref(m);
  return static_cast<int>(m.size());
}

std::pair<CoxeterDescriptor, GroupElement> crystallographic_form(const CoxeterDescriptor& desc,
                                                                 const GroupElement& w) {
  switch (desc.family) {
    case Family::A:
    case Family::B:
    case Family::D:
      require(desc.contains(w), "crystallographic_form: element not in group");
      return {desc, w};
    case Family::I2: {
      require(desc.dihedral_m == 3 || desc.dihedral_m == 4,
              "root space data is supported for I2(3) and I2(4) only");
      const auto& d = std::get<DihedralElem>(w);
      require(d.m() == desc.dihedral_m, "crystallographic_form: element not in group");
      if (desc.dihedral_m == 3) {
        Perm r({1, 2, 0});  // (1 2 3)
        Perm s({1, 0, 2});  // (1 2)
        Perm out = Perm::identity(3);
        for (int i = 0; i < d.k(); ++i) out = r.compose(out);
        if (d.reflection()) out = s.compose(out);
        return {CoxeterDescriptor::A(3), out};
      }
      SignedPerm r({2, -1});  // quarter turn
      SignedPerm s({2, 1});   // ((1 2))
      SignedPerm out = SignedPerm::identity(2);
      for (int i = 0; i < d.k(); ++i) out = r.compose(out);
      if (d.reflection()) out = s.compose(out);
      return {CoxeterDescriptor::B(2), out};
    }
    case Family::G:
      break;
  }
  throw std::invalid_argument("root space data is not supported for " + desc.name());
}

Matrix reflection_matrix(const CoxeterDescriptor& desc_in, const GroupElement& w_in) {
  auto [desc, w] = crystallographic_form(desc_in, w_in);
  int n = desc.rank;
  Matrix m(n, Vec(n, Rat(0)));
  if (desc.family == Family::A) {
    const auto& p = std::get<Perm>(w);
    for (int j = 0; j < n; ++j) m[p.apply(j)][j] = 1;
  } else {
    const auto& s = std::get<SignedPerm>(w);
    for (int j = 1; j <= n; ++j) {
      int v = s.apply(j);
      m[std::abs(v) - 1][j - 1] = v > 0 ? 1 : -1;
    }
  }
  return m;
}

Flat moved_space(const CoxeterDescriptor& desc, const GroupElement& w) {
  Matrix m = reflection_matrix(desc, w);
  int n = static_cast<int>(m.size());
  Matrix cols;
  for (int j = 0; j < n; ++j) {
    Vec col(n);
    for (int i = 0; i < n; ++i) col[i] = m[i][j] - (i == j ? 1 : 0);
    cols.push_back(std::move(col));
  }
  return span(n, cols);
}

Flat fixed_space(const CoxeterDescriptor& desc, const GroupElement& w) {
  Matrix m = reflection_matrix(desc, w);
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) m[i][i] -= 1;
  std::vector<int> pivots = rref(m);
  std::vector<char> is_pivot(n, 0);
  for (int p : pivots) is_pivot[p] = 1;
  Matrix kernel;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, Rat(0));
    v[f] = 1;
    for (size_t r = 0; r < m.size(); ++r) v[pivots[r]] = -m[r][f];
    kernel.push_back(std::move(v));
  }
  return span(n, kernel);
}

RootSystem root_system(const CoxeterDescriptor& desc_in) {
  CoxeterDescriptor desc = desc_in;
  if (desc.family == Family::I2)
    desc = crystallographic_form(desc_in, desc_in.identity_element()).first;
  require(desc.family == Family::A || desc.family == Family::B || desc.family == Family::D,
          "root space data is not supported for " + desc_in.name());

  RootSystem rs;
  rs.desc = desc_in;
  for (const GroupElement& t : reflections(desc_in).elements) {
    auto [cdesc, ct] = crystallographic_form(desc_in, t);
    Flat line = moved_space(cdesc, ct);
    if (line.dim() != 1) throw std::logic_error("root_system: reflection with a non-line move space");
    Vec root = line.basis[0];
    if (desc.family == Family::D) {
      int last = desc.rank - 1;
      while (last >= 0 && is_zero(root[last])) --last;
      if (last >= 0 && root[last].numerator() < 0)
        for (Rat& x : root) x = -x;
    }
    // A/B: the RREF generator already has a positive leading entry
    rs.roots.push_back(std::move(root));
    rs.root_reflections.push_back(t);
  }
  return rs;
}

bool carter_independent(const std::vector<Vec>& roots, int ambient_dim) {
  for (const Vec& r : roots)
    require(static_cast<int>(r.size()) == ambient_dim, "carter_independent: dimension mismatch");
  return matrix_rank(roots) == static_cast<int>(roots.size());
}

}  // namespace absord
