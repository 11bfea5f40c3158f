#include "absord/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace absord {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

SignedPerm signed_swap(int n, int i, int j, bool negate) {
  // ((i j)) when negate is false, ((i -j)) when true; 1-based i < j
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k + 1;
  img[i - 1] = negate ? -j : j;
  img[j - 1] = negate ? -i : i;
  return SignedPerm(std::move(img));
}

SignedPerm sign_flip(int n, int i) {
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k + 1;
  img[i - 1] = -i;
  return SignedPerm(std::move(img));
}

}  // namespace

CoxeterDescriptor CoxeterDescriptor::A(int n) {
  require(n >= 1, "family A: rank must be >= 1");
  return {Family::A, n, 1, 0};
}

CoxeterDescriptor CoxeterDescriptor::B(int n) {
  require(n >= 1, "family B: rank must be >= 1");
  return {Family::B, n, 1, 0};
}

CoxeterDescriptor CoxeterDescriptor::D(int n) {
  require(n >= 2, "family D: rank must be >= 2");
  return {Family::D, n, 1, 0};
}

CoxeterDescriptor CoxeterDescriptor::I2(int m) {
  require(m >= 2, "family I2: m must be >= 2");
  return {Family::I2, 2, 1, m};
}

CoxeterDescriptor CoxeterDescriptor::G(int r, int n) {
  require(r >= 1 && n >= 1, "family G: need r >= 1 and n >= 1");
  return {Family::G, n, r, 0};
}

std::vector<int> CoxeterDescriptor::exponents() const {
  std::vector<int> e;
  switch (family) {
    case Family::A:
      for (int i = 1; i < rank; ++i) e.push_back(i);
      return e;
    case Family::B:
      for (int i = 1; i <= rank; ++i) e.push_back(2 * i - 1);
      return e;
    case Family::D:
      for (int i = 1; i < rank; ++i) e.push_back(2 * i - 1);
      e.push_back(rank - 1);
      return e;
    case Family::I2:
      return {1, dihedral_m - 1};
    case Family::G:
      break;
  }
  throw std::invalid_argument("exponents: not defined for wreath family G");
}

long long CoxeterDescriptor::order() const {
  auto factorial = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (family) {
    case Family::A:
      return factorial(rank);
    case Family::B:
      return (1ll << rank) * factorial(rank);
    case Family::D:
      return (1ll << (rank - 1)) * factorial(rank);
    case Family::I2:
      return 2ll * dihedral_m;
    case Family::G: {
      long long p = 1;
      for (int i = 0; i < rank; ++i) p *= color_order;
      return p * factorial(rank);
    }
  }
  return 0;
}

int CoxeterDescriptor::coxeter_rank() const {
  switch (family) {
    case Family::A:
      return rank - 1;
    case Family::B:
    case Family::D:
    case Family::G:
      return rank;
    case Family::I2:
      return 2;
  }
  return 0;
}

GroupElement CoxeterDescriptor::identity_element() const {
  switch (family) {
    case Family::A:
      return Perm::identity(rank);
    case Family::B:
    case Family::D:
      return SignedPerm::identity(rank);
    case Family::I2:
      return DihedralElem::identity(dihedral_m);
    case Family::G:
      return ColoredPerm::identity(color_order, rank);
  }
  throw std::logic_error("identity_element");
}

bool CoxeterDescriptor::contains(const GroupElement& w) const {
  switch (family) {
    case Family::A: {
      const auto* p = std::get_if<Perm>(&w);
      return p && p->n() == rank;
    }
    case Family::B: {
      const auto* s = std::get_if<SignedPerm>(&w);
      return s && s->n() == rank;
    }
    case Family::D: {
      const auto* s = std::get_if<SignedPerm>(&w);
      return s && s->n() == rank && s->sign_changes() % 2 == 0;
    }
    case Family::I2: {
      const auto* d = std::get_if<DihedralElem>(&w);
      return d && d->m() == dihedral_m;
    }
    case Family::G: {
      const auto* c = std::get_if<ColoredPerm>(&w);
      return c && c->n() == rank && c->r() == color_order;
    }
  }
  return false;
}

std::string CoxeterDescriptor::name() const {
  switch (family) {
    case Family::A:
      return "S" + std::to_string(rank);
    case Family::B:
      return "B" + std::to_string(rank);
    case Family::D:
      return "D" + std::to_string(rank);
    case Family::I2:
      return "I2(" + std::to_string(dihedral_m) + ")";
    case Family::G:
      return "G(" + std::to_string(color_order) + "," + std::to_string(rank) + ")";
  }
  return "?";
}

CoxeterDescriptor CoxeterDescriptor::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  require(!s.empty(), "group name: empty");
  auto num = [&](size_t from, size_t to) {
    require(to > from, "group name: missing number in '" + s + "'");
    for (size_t i = from; i < to; ++i)
      require(std::isdigit(static_cast<unsigned char>(s[i])), "group name: bad number in '" + s + "'");
    return std::atoi(s.substr(from, to - from).c_str());
  };
  if (s[0] == 'S' || s[0] == 'A') return A(num(1, s.size()));
  if (s[0] == 'B') return B(num(1, s.size()));
  if (s[0] == 'D') return D(num(1, s.size()));
  if (s.rfind("I2(", 0) == 0 && s.back() == ')') return I2(num(3, s.size() - 1));
  if (s.rfind("G(", 0) == 0 && s.back() == ')') {
    auto comma = s.find(',');
    require(comma != std::string::npos, "group name: expected G(r,n)");
    return G(num(2, comma), num(comma + 1, s.size() - 1));
  }
  throw std::invalid_argument("group name: cannot parse '" + s + "'");
}

ReflectionSet reflections(const CoxeterDescriptor& desc) {
  ReflectionSet out;
  out.kind = desc.family == Family::G ? ReflectionSet::Kind::pseudo : ReflectionSet::Kind::coxeter;
  int n = desc.rank;
  switch (desc.family) {
    case Family::A:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.elements.push_back(Perm::transposition(n, i, j));
      break;
    case Family::B:
    case Family::D:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.elements.push_back(signed_swap(n, i, j, false));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.elements.push_back(signed_swap(n, i, j, true));
      if (desc.family == Family::B)
        for (int i = 1; i <= n; ++i) out.elements.push_back(sign_flip(n, i));
      break;
    case Family::I2:
      for (int k = 0; k < desc.dihedral_m; ++k)
        out.elements.push_back(DihedralElem(desc.dihedral_m, true, k));
      break;
    case Family::G: {
      int r = desc.color_order;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = 0; c < r; ++c) {
            std::vector<int> colors(n, 0);
            colors[a] = c;
            colors[b] = (r - c) % r;
            out.elements.push_back(ColoredPerm(r, std::move(colors), Perm::transposition(n, a, b)));
          }
      for (int i = 0; i < n; ++i)
        for (int c = 1; c < r; ++c) {
          std::vector<int> colors(n, 0);
          colors[i] = c;
          out.elements.push_back(ColoredPerm(r, std::move(colors), Perm::identity(n)));
        }
      break;
    }
  }
  return out;
}

std::vector<GroupElement> simple_generators(const CoxeterDescriptor& desc) {
  std::vector<GroupElement> gens;
  int n = desc.rank;
  switch (desc.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) gens.push_back(Perm::transposition(n, i, i + 1));
      break;
    case Family::B:
      gens.push_back(sign_flip(n, 1));
      for (int i = 1; i < n; ++i) gens.push_back(signed_swap(n, i, i + 1, false));
      break;
    case Family::D:
      gens.push_back(signed_swap(n, 1, 2, true));
      for (int i = 1; i < n; ++i) gens.push_back(signed_swap(n, i, i + 1, false));
      break;
    case Family::I2:
      gens.push_back(DihedralElem(desc.dihedral_m, true, 0));
      gens.push_back(DihedralElem(desc.dihedral_m, true, 1));
      break;
    case Family::G:
      throw std::invalid_argument("simple_generators: not defined for wreath family G");
  }
  return gens;
}

int absolute_length(const CoxeterDescriptor& desc, const GroupElement& w) {
  require(desc.contains(w), "absolute_length: element does not belong to " + desc.name());
  switch (desc.family) {
    case Family::A:
      return desc.rank - std::get<Perm>(w).num_cycles();
    case Family::B:
    case Family::D:
      return desc.rank - std::get<SignedPerm>(w).num_balanced_cycles();
    case Family::G:
      return desc.rank - std::get<ColoredPerm>(w).num_balanced_cycles();
    case Family::I2: {
      const auto& d = std::get<DihedralElem>(w);
      if (d.is_identity()) return 0;
      return d.reflection() ? 1 : 2;
    }
  }
  return 0;
}

namespace {

std::vector<std::vector<int>> parse_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> current;
  size_t i = 0;
  int depth = 0;
  auto flush = [&]() {
    if (!current.empty()) {
      cycles.push_back(current);
      current.clear();
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      ++depth;
      ++i;
    } else if (c == ')') {
      require(depth > 0, "cycle notation: unbalanced ')'");
      flush();
      --depth;
      ++i;
    } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      require(depth > 0, "cycle notation: number outside parentheses");
      bool neg = c == '-';
      if (neg) ++i;
      require(i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])),
              "cycle notation: malformed number");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      current.push_back(neg ? -v : v);
    } else {
      throw std::invalid_argument("cycle notation: unexpected character '" + std::string(1, c) + "'");
    }
  }
  require(depth == 0, "cycle notation: unbalanced '('");
  return cycles;
}

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm w = Perm::identity(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k;
    for (size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      require(a >= 1 && a <= n && b >= 1, "cycle notation: point out of range");
      img[a - 1] = b - 1;
    }
    w = Perm(img).compose(w);
  }
  return w;
}

SignedPerm signed_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  SignedPerm w = SignedPerm::identity(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    auto assign = [&](int a, int b) {
      require(std::abs(a) >= 1 && std::abs(a) <= n && std::abs(b) >= 1 && std::abs(b) <= n,
              "cycle notation: point out of range");
      int& slot = img[std::abs(a) - 1];
      int value = a > 0 ? b : -b;
      require(slot == std::abs(a) || slot == value, "cycle notation: conflicting images");
      slot = value;
    };
    for (size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      assign(a, b);  // mirror -a -> -b is implied by the storage
    }
    w = SignedPerm(img).compose(w);
  }
  return w;
}

ColoredPerm colored_from_text(int r, int n, std::string_view text) {
  auto semi = text.find(';');
  require(text.size() >= 2 && text.front() == '[' && text.back() == ']' && semi != std::string_view::npos,
          "wreath element: expected [c1,...,cn; p1 ... pn]");
  auto read_ints = [](std::string_view part) {
    std::vector<int> vals;
    size_t i = 0;
    while (i < part.size()) {
      char c = part[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        int v = 0;
        while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) {
          v = v * 10 + (part[i] - '0');
          ++i;
        }
        vals.push_back(v);
      } else {
        require(std::isspace(static_cast<unsigned char>(c)) || c == ',', "wreath element: bad character");
        ++i;
      }
    }
    return vals;
  };
  std::vector<int> colors = read_ints(text.substr(1, semi - 1));
  std::vector<int> line = read_ints(text.substr(semi + 1, text.size() - semi - 2));
  require(static_cast<int>(colors.size()) == n && static_cast<int>(line.size()) == n,
          "wreath element: wrong length");
  for (int& c : colors) c %= r;
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) {
    require(line[i] >= 1 && line[i] <= n, "wreath element: image out of range");
    img[i] = line[i] - 1;
  }
  return ColoredPerm(r, std::move(colors), Perm(std::move(img)));
}

}  // namespace

GroupElement parse_element(const CoxeterDescriptor& desc, std::string_view text) {
  std::string trimmed(text);
  size_t a = trimmed.find_first_not_of(" \t");
  size_t b = trimmed.find_last_not_of(" \t");
  std::string body = a == std::string::npos ? "" : trimmed.substr(a, b - a + 1);
  require(!body.empty(), "element: empty text");
  if (body == "e" || body == "()") return desc.identity_element();

  switch (desc.family) {
    case Family::A:
      return perm_from_cycles(desc.rank, parse_cycles(body));
    case Family::B:
    case Family::D: {
      GroupElement w = signed_from_cycles(desc.rank, parse_cycles(body));
      require(desc.contains(w), "element: not a member of " + desc.name());
      return w;
    }
    case Family::G:
      return colored_from_text(desc.color_order, desc.rank, body);
    case Family::I2: {
      require(body.size() >= 2 && (body[0] == 'r' || body[0] == 's'),
              "dihedral element: expected rK or sK");
      int k = std::atoi(body.substr(1).c_str());
      return DihedralElem(desc.dihedral_m, body[0] == 's', k);
    }
  }
  throw std::logic_error("parse_element");
}

}  // namespace absord
