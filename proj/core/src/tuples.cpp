#include "absord/tuples.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "absord/elements.hpp"

namespace absord {

namespace {

long long ipow(long long b, int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v *= b;
  return v;
}

long long factorial(int n) {
  long long v = 1;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

void distinct_tuples(int n, int k, std::vector<int>& cur,
                     std::vector<char>& used,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int a = 1; a <= n; ++a) {
    if (used[a]) continue;
    used[a] = 1;
    cur.push_back(a);
    distinct_tuples(n, k, cur, used, out);
    cur.pop_back();
    used[a] = 0;
  }
}

// Sums f over all labeled trees on {v_0,...,v_{m-1}} where f depends only on
// deg(v_0), via the Prufer encoding: v_0 appears deg(v_0)-1 times in the code.
template <typename F>
long long sum_over_trees(int m, F f) {
  if (m <= 1) return f(0);
  if (m == 2) return f(1);
  std::vector<int> code(m - 2, 0);
  long long total = 0;
  while (true) {
    int zeros = 0;
    for (int d : code)
      if (d == 0) ++zeros;
    total += f(1 + zeros);
    int i = 0;
    while (i < m - 2 && code[i] == m - 1) code[i++] = 0;
    if (i == m - 2) break;
    ++code[i];
  }
  return total;
}

}  // namespace

TupleSpace tuple_poset(const GroupUniverse& sym, int k) {
  if (sym.desc.family != Family::A)
    throw std::invalid_argument("tuple_poset needs a symmetric group");
  const int n = sym.desc.rank;
  if (k < 1 || k > n) throw std::invalid_argument("tuple_poset: bad k");

  TupleSpace ts;
  {
    std::vector<int> cur;
    std::vector<char> used(n + 1, 0);
    distinct_tuples(n, k, cur, used, ts.points);
  }
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(ts.points.size()); ++i)
    index[ts.points[i]] = i;

  auto act = [&](const GroupElement& g, const std::vector<int>& t) {
    const auto& p = std::get<Perm>(g);
    std::vector<int> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = p.apply(t[i] - 1) + 1;
    return out;
  };

  std::vector<int> base(k);
  for (int i = 0; i < k; ++i) base[i] = n - k + i + 1;

  ActionSpace space;
  space.base = index.at(base);
  for (const auto& t : ts.points) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    space.labels.push_back(os.str());
  }
  for (int r : sym.reflections) {
    std::vector<int> img(ts.points.size());
    for (int i = 0; i < static_cast<int>(ts.points.size()); ++i)
      img[i] = index.at(act(sym.elems[r], ts.points[i]));
    space.gen_images.push_back(std::move(img));
  }
  ts.poset = build_absolute_order(space);

  for (int w = 0; w < sym.size(); ++w)
    if (act(sym.elems[w], base) == base) ts.stabilizer.push_back(w);
  return ts;
}

ColoredTupleSpace colored_tuple_poset(const GroupUniverse& wreath, int k) {
  if (wreath.desc.family != Family::G)
    throw std::invalid_argument("colored_tuple_poset needs a wreath product");
  const int n = wreath.desc.rank;
  const int r = wreath.desc.color_order;
  if (k < 1 || k > n) throw std::invalid_argument("colored_tuple_poset: bad k");

  ColoredTupleSpace ts;
  {
    std::vector<std::vector<int>> letters;
    std::vector<int> cur;
    std::vector<char> used(n + 1, 0);
    distinct_tuples(n, k, cur, used, letters);
    std::vector<int> colors(k, 0);
    for (const auto& lt : letters) {
      std::fill(colors.begin(), colors.end(), 0);
      while (true) {
        std::vector<std::pair<int, int>> pt(k);
        for (int i = 0; i < k; ++i) pt[i] = {colors[i], lt[i]};
        ts.points.push_back(std::move(pt));
        int i = 0;
        while (i < k && colors[i] == r - 1) colors[i++] = 0;
        if (i == k) break;
        ++colors[i];
      }
    }
  }
  std::map<std::vector<std::pair<int, int>>, int> index;
  for (int i = 0; i < static_cast<int>(ts.points.size()); ++i)
    index[ts.points[i]] = i;

  auto act = [&](const GroupElement& g,
                 const std::vector<std::pair<int, int>>& t) {
    const auto& cp = std::get<ColoredPerm>(g);
    std::vector<std::pair<int, int>> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      int p = cp.perm().apply(t[i].second - 1);
      out[i] = {(t[i].first + cp.colors()[p]) % r, p + 1};
    }
    return out;
  };

  std::vector<std::pair<int, int>> base(k);
  for (int i = 0; i < k; ++i) base[i] = {0, n - k + i + 1};

  ActionSpace space;
  space.base = index.at(base);
  for (const auto& t : ts.points) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i)
      os << (i ? "," : "") << t[i].first << ":" << t[i].second;
    os << ")";
    space.labels.push_back(os.str());
  }
  for (int g : wreath.reflections) {
    std::vector<int> img(ts.points.size());
    for (int i = 0; i < static_cast<int>(ts.points.size()); ++i)
      img[i] = index.at(act(wreath.elems[g], ts.points[i]));
    space.gen_images.push_back(std::move(img));
  }
  ts.poset = build_absolute_order(space);

  for (int w = 0; w < wreath.size(); ++w)
    if (act(wreath.elems[w], base) == base) ts.stabilizer.push_back(w);
  return ts;
}

long long tree_chain_formula(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("tree_chain_formula: need 1 <= k < n");
  long long sum = sum_over_trees(k + 1, [&](int deg) { return ipow(n - k, deg); });
  return factorial(k) * sum;
}

long long alternating_chain_formula(int n) {
  if (n < 2) throw std::invalid_argument("alternating_chain_formula: need n >= 2");
  long long sum = sum_over_trees(n - 1, [](int deg) { return ipow(2, deg); });
  return factorial(n - 2) * sum;
}

}  // namespace absord
