#include "absord/matchings.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace absord {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

int Matching::pos_of(int point) {
  return point > 0 ? 2 * (point - 1) : 2 * (-point - 1) + 1;
}

int Matching::point_at(int pos) { return pos % 2 == 0 ? pos / 2 + 1 : -(pos / 2 + 1); }

Matching Matching::base(int n) {
  Matching x;
  x.n = n;
  x.partner.resize(2 * n);
  for (int i = 1; i <= n; ++i) {
    x.partner[pos_of(i)] = pos_of(-i);
    x.partner[pos_of(-i)] = pos_of(i);
  }
  return x;
}

int Matching::image(int point) const { return point_at(partner[pos_of(point)]); }

std::string Matching::str() const {
  std::string out;
  std::vector<char> used(2 * n, 0);
  for (int pos = 0; pos < 2 * n; ++pos) {
    if (used[pos]) continue;
    used[pos] = used[partner[pos]] = 1;
    out += "{" + std::to_string(point_at(pos)) + "," +
           std::to_string(point_at(partner[pos])) + "}";
  }
  return out;
}

Matching parse_matching(const std::string& text, int n) {
  Matching x;
  x.n = n;
  x.partner.assign(2 * n, -1);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&] {
    skip_ws();
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    require(i > start && (text[start] != '-' || i > start + 1), "matching: expected a number");
    return std::stoi(text.substr(start, i - start));
  };
  int arcs = 0;
  skip_ws();
  while (i < text.size()) {
    require(text[i] == '{', "matching: expected '{'");
    ++i;
    int a = read_int();
    skip_ws();
    require(i < text.size() && text[i] == ',', "matching: expected ','");
    ++i;
    int b = read_int();
    skip_ws();
    require(i < text.size() && text[i] == '}', "matching: expected '}'");
    ++i;
    require(a != 0 && b != 0 && std::abs(a) <= n && std::abs(b) <= n,
            "matching: point out of range");
    int pa = Matching::pos_of(a), pb = Matching::pos_of(b);
    require(pa != pb && x.partner[pa] == -1 && x.partner[pb] == -1,
            "matching: repeated point");
    x.partner[pa] = pb;
    x.partner[pb] = pa;
    ++arcs;
    skip_ws();
  }
  require(arcs == n, "matching: wrong number of arcs");
  return x;
}

std::vector<Matching> all_matchings(int n) {
  std::vector<Matching> out;
  Matching cur;
  cur.n = n;
  cur.partner.assign(2 * n, -1);
  auto rec = [&](auto&& self, int fromPos) -> void {
    while (fromPos < 2 * n && cur.partner[fromPos] != -1) ++fromPos;
    if (fromPos == 2 * n) {
      out.push_back(cur);
      return;
    }
    for (int other = fromPos + 1; other < 2 * n; ++other) {
      if (cur.partner[other] != -1) continue;
      cur.partner[fromPos] = other;
      cur.partner[other] = fromPos;
      self(self, fromPos + 1);
      cur.partner[fromPos] = -1;
      cur.partner[other] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Matching> flip_neighbors(const Matching& x) {
  std::vector<std::pair<int, int>> arcs;
  for (int pos = 0; pos < 2 * x.n; ++pos)
    if (pos < x.partner[pos]) arcs.emplace_back(pos, x.partner[pos]);
  std::vector<Matching> out;
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      auto [a, b] = arcs[i];
      auto [c, d] = arcs[j];
      for (int variant = 0; variant < 2; ++variant) {
        Matching y = x;
        int c2 = variant == 0 ? c : d;
        int d2 = variant == 0 ? d : c;
        y.partner[a] = c2;
        y.partner[c2] = a;
        y.partner[b] = d2;
        y.partner[d2] = b;
        out.push_back(std::move(y));
      }
    }
  return out;
}

bool flip_adjacent(const Matching& x, const Matching& y) {
  if (x.n != y.n) return false;
  int diff = 0;
  for (int pos = 0; pos < 2 * x.n; ++pos)
    if (x.partner[pos] != y.partner[pos]) ++diff;
  return diff == 4;
}

ColoredPerm matching_to_balanced(const Matching& x) {
  int n = x.n;
  std::vector<int> img(n + 1, 0);
  std::vector<char> done(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    if (done[k]) continue;
    if (x.image(k) == -k) {
      img[k] = k;
      done[k] = 1;
      continue;
    }
    // nontrivial cycle of x united with the base matching; k is its least
    // letter, and the cycle is oriented so the base arc at k runs -k -> k
    int cur = k;
    do {
      int h = x.image(cur);
      int letter = std::abs(cur);
      img[letter] = cur > 0 ? -h : h;
      done[letter] = 1;
      cur = -h;
    } while (cur != k);
  }
  SignedPerm w(std::vector<int>(img.begin() + 1, img.end()));
  ColoredPerm c = ColoredPerm::from_signed(w);
  if (!c.balanced()) throw std::logic_error("matching orientation produced an unbalanced element");
  return c;
}

Matching balanced_to_matching(const ColoredPerm& w) {
  require(w.r() == 2 && w.balanced(), "balanced_to_matching needs a balanced element with r = 2");
  int n = w.n();
  SignedPerm s = w.to_signed();
  Matching x;
  x.n = n;
  x.partner.assign(2 * n, -1);
  auto set_arc = [&](int u, int v) {
    int pu = Matching::pos_of(u), pv = Matching::pos_of(v);
    if (x.partner[pu] != -1 && x.partner[pu] != pv)
      throw std::logic_error("inconsistent arcs while decoding a balanced element");
    x.partner[pu] = pv;
    x.partner[pv] = pu;
  };
  std::vector<char> visited(2 * n, 0);
  for (int pos = 0; pos < 2 * n; ++pos) {
    int p = Matching::point_at(pos);
    if (visited[pos]) continue;
    if (s.apply(p) == p) {
      set_arc(p, -p);
      continue;
    }
    // positions are scanned in increasing absolute value and mirror cycles
    // are marked below, so p is the positive least letter on its cycle pair;
    // the mirror cycle would orient the same arcs the other way
    int a = p;
    do {
      visited[Matching::pos_of(a)] = 1;
      visited[Matching::pos_of(-a)] = 1;
      int b = s.apply(a);
      set_arc(a, -b);
      a = b;
    } while (a != p);
  }
  return x;
}

MatchingPoset matchings_poset(int n) {
  MatchingPoset result;
  result.points = all_matchings(n);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < result.points.size(); ++i)
    index[result.points[i].partner] = static_cast<int>(i);

  std::vector<std::string> labels;
  for (const Matching& x : result.points) labels.push_back(x.str());
  std::vector<std::vector<int>> adjacency(result.points.size());
  for (size_t i = 0; i < result.points.size(); ++i)
    for (const Matching& y : flip_neighbors(result.points[i]))
      adjacency[i].push_back(index.at(y.partner));
  result.poset = poset_from_graph(adjacency, index.at(Matching::base(n).partner), labels);
  return result;
}

std::vector<ColoredPerm> balanced_elements(int r, int n) {
  std::vector<ColoredPerm> out;
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  std::sort(images.begin(), images.end());
  do {
    Perm p(images);
    std::vector<int> colors(n, 0);
    while (true) {
      ColoredPerm w(r, colors, p);
      if (w.balanced()) out.push_back(w);
      int pos = 0;
      while (pos < n && colors[pos] == r - 1) colors[pos++] = 0;
      if (pos == n) break;
      ++colors[pos];
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<ColoredPerm> balanced_reflections(int r, int n) {
  std::vector<ColoredPerm> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < r; ++c) {
        std::vector<int> colors(n, 0);
        colors[a] = c;
        colors[b] = (r - c) % r;
        out.emplace_back(r, colors, Perm::transposition(n, a, b));
      }
  return out;
}

int balanced_length(const ColoredPerm& w) { return w.n() - w.perm().num_cycles(); }

BalancedPoset balanced_poset(int r, int n) {
  BalancedPoset result;
  result.points = balanced_elements(r, n);
  std::unordered_map<GroupElement, int, ElemHash> index;
  for (size_t i = 0; i < result.points.size(); ++i)
    index[GroupElement(result.points[i])] = static_cast<int>(i);

  RankedPoset& p = result.poset;
  for (const ColoredPerm& w : result.points) {
    p.labels.push_back(to_string(GroupElement(w)));
    p.ranks.push_back(balanced_length(w));
  }
  std::vector<ColoredPerm> taus = balanced_reflections(r, n);
  for (size_t u = 0; u < result.points.size(); ++u)
    for (const ColoredPerm& tau : taus) {
      ColoredPerm v = tau.compose(result.points[u]);
      if (!v.balanced() || balanced_length(v) != p.ranks[u] + 1) continue;
      p.covers.emplace_back(static_cast<int>(u), index.at(GroupElement(v)));
    }
  std::sort(p.covers.begin(), p.covers.end());
  p.covers.erase(std::unique(p.covers.begin(), p.covers.end()), p.covers.end());

  auto lower = p.lower_adjacency();
  for (size_t i = 0; i < result.points.size(); ++i)
    if (p.ranks[i] > 0 && lower[i].empty())
      throw std::logic_error("balanced element with positive rank has no lower cover");
  return result;
}

ProjectionReport check_balanced_projection(int r, int n) {
  ProjectionReport report;
  BalancedPoset bp = balanced_poset(r, n);
  GroupUniverse sym = enumerate_group(CoxeterDescriptor::A(n));
  RankedPoset sym_poset = group_poset(sym);

  std::vector<int> proj(bp.points.size());
  for (size_t i = 0; i < bp.points.size(); ++i)
    proj[i] = sym.id(GroupElement(bp.points[i].perm()));

  report.rank_preserving = true;
  for (size_t i = 0; i < bp.points.size(); ++i)
    if (bp.poset.ranks[i] != sym.lengths[proj[i]]) report.rank_preserving = false;

  std::vector<long long> fiber(sym.size(), 0);
  for (int image : proj) ++fiber[image];
  report.fibers_match = true;
  for (int w = 0; w < sym.size(); ++w) {
    long long expected = 1;
    for (int i = 0; i < sym.lengths[w]; ++i) expected *= r;
    if (fiber[w] != expected) report.fibers_match = false;
  }

  std::set<std::pair<int, int>> sym_covers(sym_poset.covers.begin(), sym_poset.covers.end());
  report.covers_project = true;
  for (const auto& [u, v] : bp.poset.covers)
    if (!sym_covers.count({proj[u], proj[v]})) report.covers_project = false;

  report.unique_lifts = true;
  auto bp_lower = bp.poset.lower_adjacency();
  auto sym_lower = sym_poset.lower_adjacency();
  for (size_t w = 0; w < bp.points.size(); ++w) {
    std::vector<int> images;
    for (int x : bp_lower[w]) images.push_back(proj[x]);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      report.unique_lifts = false;
    std::vector<int> expected = sym_lower[proj[w]];
    std::sort(expected.begin(), expected.end());
    if (images != expected) report.unique_lifts = false;
  }

  report.intervals_isomorphic = true;
  std::vector<int> sym_max = sym_poset.maximal_elements();
  std::set<int> sym_max_set(sym_max.begin(), sym_max.end());
  for (int m : bp.poset.maximal_elements()) {
    ++report.maximal_interval_count;
    if (!sym_max_set.count(proj[m])) {
      report.intervals_isomorphic = false;
      continue;
    }
    RankedPoset up = interval(bp.poset, 0, m);
    RankedPoset down = interval(sym_poset, 0, proj[m]);
    if (!are_isomorphic(up, down)) report.intervals_isomorphic = false;
  }
  return report;
}

Perm embed_signed_in_symmetric(const SignedPerm& w) {
  int n = w.n();
  auto pos = [](int p) { return p > 0 ? 2 * p - 2 : -2 * p - 1; };
  std::vector<int> img(2 * n);
  for (int i = 1; i <= n; ++i) {
    img[pos(i)] = pos(w.apply(i));
    img[pos(-i)] = pos(w.apply(-i));
  }
  return Perm(img);
}

std::vector<int> embedded_hyperoctahedral(const GroupUniverse& s2n, int n) {
  GroupUniverse hyper = enumerate_group(CoxeterDescriptor::B(n));
  std::vector<int> members;
  for (const GroupElement& w : hyper.elems) {
    int idx = s2n.id(GroupElement(embed_signed_in_symmetric(std::get<SignedPerm>(w))));
    if (idx < 0) throw std::logic_error("embedded element missing from the ambient group");
    members.push_back(idx);
  }
  std::sort(members.begin(), members.end());
  return members;
}

HyperoctahedralReport check_hyperoctahedral(const GroupUniverse& s2n, int n) {
  GroupContext G = full_context(s2n);
  std::vector<int> members = embedded_hyperoctahedral(s2n, n);
  std::vector<int> own_reflections;
  for (const GroupElement& t : reflections(CoxeterDescriptor::B(n)).elements)
    own_reflections.push_back(
        s2n.id(GroupElement(embed_signed_in_symmetric(std::get<SignedPerm>(t)))));

  HyperoctahedralReport report;
  report.quasi = check_quasi_modular(G, members, own_reflections);
  report.modular = check_modular(G, members).modular;

  std::vector<int> img(n);
  for (int i = 1; i < n; ++i) img[i - 1] = i + 1;
  img[n - 1] = -1;
  int witness = s2n.id(GroupElement(embed_signed_in_symmetric(SignedPerm(img))));
  report.witness_length = s2n.lengths[witness];
  report.factor_degree_bound =
      report.quasi.group_poly.degree() - report.quasi.quotient_poly.degree();
  return report;
}

}  // namespace absord
