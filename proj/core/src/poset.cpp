#include "absord/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace absord {

std::vector<std::vector<int>> RankedPoset::upper_adjacency() const {
  std::vector<std::vector<int>> adj(size());
  for (auto [lo, hi] : covers) adj[lo].push_back(hi);
  return adj;
}

std::vector<std::vector<int>> RankedPoset::lower_adjacency() const {
  std::vector<std::vector<int>> adj(size());
  for (auto [lo, hi] : covers) adj[hi].push_back(lo);
  return adj;
}

std::vector<int> RankedPoset::maximal_elements() const {
  std::vector<char> has_upper(size(), 0);
  for (auto [lo, hi] : covers) has_upper[lo] = 1;
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (!has_upper[i]) out.push_back(i);
  return out;
}

int RankedPoset::minimum() const {
  int found = -1;
  for (int i = 0; i < size(); ++i)
    if (ranks[i] == 0) {
      if (found >= 0) throw std::logic_error("RankedPoset: several rank-0 elements");
      found = i;
    }
  if (found < 0) throw std::logic_error("RankedPoset: no rank-0 element");
  return found;
}

RankedPoset poset_from_graph(const std::vector<std::vector<int>>& adj, int base,
                             std::vector<std::string> labels) {
  int n = static_cast<int>(adj.size());
  std::vector<int> dist(n, -1);
  dist[base] = 0;
  std::deque<int> queue{base};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int next : adj[cur])
      if (dist[next] < 0) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
  }
  for (int d : dist)
    if (d < 0) throw std::invalid_argument("poset_from_graph: graph is not connected");

  RankedPoset p;
  p.labels = std::move(labels);
  p.ranks = std::move(dist);
  for (int a = 0; a < n; ++a)
    for (int b : adj[a])
      if (p.ranks[b] == p.ranks[a] + 1) p.covers.emplace_back(a, b);
  std::sort(p.covers.begin(), p.covers.end());
  p.covers.erase(std::unique(p.covers.begin(), p.covers.end()), p.covers.end());
  return p;
}

RankedPoset build_absolute_order(const ActionSpace& space) {
  int n = static_cast<int>(space.labels.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& images : space.gen_images) {
    if (static_cast<int>(images.size()) != n)
      throw std::invalid_argument("build_absolute_order: generator table has wrong size");
    for (int p = 0; p < n; ++p)
      if (images[p] != p) {
        adj[p].push_back(images[p]);
        adj[images[p]].push_back(p);
      }
  }
  return poset_from_graph(adj, space.base, space.labels);
}

IntPolynomial rank_polynomial(const RankedPoset& p) { return IntPolynomial::from_counts(p.ranks); }

GradedInfo graded_info(const RankedPoset& p) {
  GradedInfo info;
  info.top_rank = *std::max_element(p.ranks.begin(), p.ranks.end());
  info.graded = true;
  for (int m : p.maximal_elements())
    if (p.ranks[m] != info.top_rank) info.graded = false;
  return info;
}

bool is_graded(const RankedPoset& p) { return graded_info(p).graded; }

long long count_maximal_chains(const RankedPoset& p) {
  int min = p.minimum();
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p.ranks[a] < p.ranks[b]; });
  std::vector<long long> paths(p.size(), 0);
  paths[min] = 1;
  auto upper = p.upper_adjacency();
  for (int v : order)
    for (int w : upper[v]) paths[w] += paths[v];
  long long total = 0;
  for (int m : p.maximal_elements()) total += paths[m];
  return total;
}

// ---------- isomorphism ----------

namespace {

// iterated refinement by rank, degrees and neighbour colour multisets
std::vector<int> stable_colors(const RankedPoset& p) {
  auto upper = p.upper_adjacency();
  auto lower = p.lower_adjacency();
  std::vector<long long> color(p.size());
  for (int i = 0; i < p.size(); ++i)
    color[i] = (static_cast<long long>(p.ranks[i]) << 24) ^
               (static_cast<long long>(upper[i].size()) << 12) ^ lower[i].size();
  for (int round = 0; round < p.size(); ++round) {
    std::map<std::tuple<long long, std::vector<long long>, std::vector<long long>>, int> remap;
    std::vector<long long> next(p.size());
    for (int i = 0; i < p.size(); ++i) {
      std::vector<long long> up, down;
      for (int j : upper[i]) up.push_back(color[j]);
      for (int j : lower[i]) down.push_back(color[j]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      auto key = std::make_tuple(color[i], std::move(up), std::move(down));
      auto [it, inserted] = remap.emplace(std::move(key), static_cast<int>(remap.size()));
      next[i] = it->second;
    }
    bool changed = false;
    for (int i = 0; i < p.size(); ++i) {
      if (next[i] != color[i]) changed = true;
    }
    color.assign(next.begin(), next.end());
    if (!changed) break;
  }
  std::vector<int> out(p.size());
  for (int i = 0; i < p.size(); ++i) out[i] = static_cast<int>(color[i]);
  return out;
}

struct IsoSearch {
  const RankedPoset& p;
  const RankedPoset& q;
  std::vector<int> cp, cq;                    // stable colors
  std::vector<std::vector<int>> q_by_color;   // candidates per color
  std::vector<std::vector<int>> p_up, p_down, q_up, q_down;
  std::vector<int> map_pq, map_qp;

  bool extend(int v) {
    if (v == p.size()) return true;
    for (int w : q_by_color[cp[v]]) {
      if (map_qp[w] >= 0) continue;
      bool ok = true;
      for (int u : p_up[v])
        if (map_pq[u] >= 0 && !has_cover(q_up[w], map_pq[u])) {
          ok = false;
          break;
        }
      if (ok)
        for (int u : p_down[v])
          if (map_pq[u] >= 0 && !has_cover(q_down[w], map_pq[u])) {
            ok = false;
            break;
          }
      // reverse direction: previously mapped q-covers of w must come from v's covers
      if (ok)
        for (int x : q_up[w])
          if (map_qp[x] >= 0 && !has_cover(p_up[v], map_qp[x])) {
            ok = false;
            break;
          }
      if (ok)
        for (int x : q_down[w])
          if (map_qp[x] >= 0 && !has_cover(p_down[v], map_qp[x])) {
            ok = false;
            break;
          }
      if (!ok) continue;
      map_pq[v] = w;
      map_qp[w] = v;
      if (extend(v + 1)) return true;
      map_pq[v] = -1;
      map_qp[w] = -1;
    }
    return false;
  }

  static bool has_cover(const std::vector<int>& list, int x) {
    return std::find(list.begin(), list.end(), x) != list.end();
  }
};

}  // namespace

bool are_isomorphic(const RankedPoset& p, const RankedPoset& q) {
  if (p.size() != q.size() || p.covers.size() != q.covers.size()) return false;
  std::vector<int> cp = stable_colors(p), cq = stable_colors(q);
  // colors are computed independently; align them by canonical signature
  auto signature = [](const RankedPoset& poset, const std::vector<int>& colors) {
    // signature per color class: (rank, up-degree, down-degree, size) multiset
    auto upper = poset.upper_adjacency();
    auto lower = poset.lower_adjacency();
    std::map<std::vector<long long>, int> sig_count;
    std::map<int, std::vector<long long>> class_sig;
    for (int i = 0; i < poset.size(); ++i) {
      auto& sig = class_sig[colors[i]];
      if (sig.empty())
        sig = {poset.ranks[i], static_cast<long long>(upper[i].size()),
               static_cast<long long>(lower[i].size())};
    }
    for (int i = 0; i < poset.size(); ++i) sig_count[class_sig[colors[i]]]++;
    return sig_count;
  };
  // remap both colorings to shared canonical ids keyed by the refined class
  // signature; when signatures differ the posets cannot be isomorphic
  auto canonical = [](const RankedPoset& poset, std::vector<int>& colors) {
    auto upper = poset.upper_adjacency();
    auto lower = poset.lower_adjacency();
    // canonical key per class: iterate refinement already done, so use
    // (rank, updeg, downdeg, classsize) plus sorted member ranks
    std::map<int, std::vector<long long>> key;
    std::map<int, int> size;
    for (int i = 0; i < poset.size(); ++i) ++size[colors[i]];
    for (int i = 0; i < poset.size(); ++i) {
      auto& k = key[colors[i]];
      if (k.empty())
        k = {poset.ranks[i], static_cast<long long>(upper[i].size()),
             static_cast<long long>(lower[i].size()), size[colors[i]]};
    }
    std::map<std::vector<long long>, std::vector<int>> classes;  // key -> old ids
    for (auto& [old_id, k] : key) classes[k].push_back(old_id);
    std::map<int, int> remap;
    int next = 0;
    for (auto& [k, olds] : classes) {
      if (olds.size() > 1) return false;  // key collision: refine would be unsound
      remap[olds[0]] = next++;
    }
    for (int& c : colors) c = remap[c];
    return true;
  };
  if (signature(p, cp) != signature(q, cq)) return false;
  if (!canonical(p, cp) || !canonical(q, cq)) {
    // fall back: coarse colors (rank only), still correct just slower
    for (int i = 0; i < p.size(); ++i) cp[i] = p.ranks[i];
    for (int i = 0; i < q.size(); ++i) cq[i] = q.ranks[i];
  }
  std::map<int, int> count_p, count_q;
  for (int c : cp) ++count_p[c];
  for (int c : cq) ++count_q[c];
  if (count_p != count_q) return false;

  IsoSearch search{p, q, cp, cq, {}, {}, {}, {}, {}, {}, {}};
  int max_color = 0;
  for (int c : cp) max_color = std::max(max_color, c + 1);
  search.q_by_color.resize(max_color);
  for (int w = 0; w < q.size(); ++w) {
    if (cq[w] >= max_color) return false;
    search.q_by_color[cq[w]].push_back(w);
  }
  search.p_up = p.upper_adjacency();
  search.p_down = p.lower_adjacency();
  search.q_up = q.upper_adjacency();
  search.q_down = q.lower_adjacency();
  search.map_pq.assign(p.size(), -1);
  search.map_qp.assign(q.size(), -1);
  return search.extend(0);
}

long long closed_walk_count(const RankedPoset& p, int length) {
  int n = p.size();
  std::vector<long long> a(static_cast<size_t>(n) * n, 0);
  for (auto [lo, hi] : p.covers) {
    a[static_cast<size_t>(lo) * n + hi] = 1;
    a[static_cast<size_t>(hi) * n + lo] = 1;
  }
  std::vector<long long> power(a), next(a.size());
  for (int step = 1; step < length; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        long long v = power[static_cast<size_t>(i) * n + k];
        if (v == 0) continue;
        const long long* row = &a[static_cast<size_t>(k) * n];
        long long* out = &next[static_cast<size_t>(i) * n];
        for (int j = 0; j < n; ++j) out[j] += v * row[j];
      }
    power.swap(next);
  }
  long long trace = 0;
  for (int i = 0; i < n; ++i) trace += power[static_cast<size_t>(i) * n + i];
  return trace;
}

bool is_order_isomorphism(const RankedPoset& p, const RankedPoset& q, const std::vector<int>& map) {
  if (p.size() != q.size() || static_cast<int>(map.size()) != p.size()) return false;
  std::vector<char> hit(q.size(), 0);
  for (int i = 0; i < p.size(); ++i) {
    if (map[i] < 0 || map[i] >= q.size() || hit[map[i]]) return false;
    hit[map[i]] = 1;
    if (p.ranks[i] != q.ranks[map[i]]) return false;
  }
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(p.covers.size());
  for (auto [lo, hi] : p.covers) mapped.emplace_back(map[lo], map[hi]);
  std::sort(mapped.begin(), mapped.end());
  return mapped == q.covers;
}

// ---------- reachability, intervals, ideals ----------

UpSets::UpSets(const RankedPoset& p) : n_(p.size()) {
  words_ = (n_ + 63) / 64;
  bits_.assign(words_ * n_, 0);
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p.ranks[a] > p.ranks[b]; });
  auto upper = p.upper_adjacency();
  for (int v : order) {
    uint64_t* row = &bits_[words_ * v];
    row[v / 64] |= uint64_t{1} << (v % 64);
    for (int w : upper[v]) {
      const uint64_t* src = &bits_[words_ * w];
      for (size_t k = 0; k < words_; ++k) row[k] |= src[k];
    }
  }
}

bool UpSets::leq(int a, int b) const {
  return (bits_[words_ * a + b / 64] >> (b % 64)) & 1;
}

RankedPoset interval(const RankedPoset& p, int lo, int hi) {
  UpSets up(p);
  if (!up.leq(lo, hi)) throw std::invalid_argument("interval: lo is not below hi");
  std::vector<int> members;
  std::vector<int> where(p.size(), -1);
  for (int x = 0; x < p.size(); ++x)
    if (up.leq(lo, x) && up.leq(x, hi)) {
      where[x] = static_cast<int>(members.size());
      members.push_back(x);
    }
  RankedPoset out;
  for (int x : members) {
    out.labels.push_back(p.labels[x]);
    out.ranks.push_back(p.ranks[x] - p.ranks[lo]);
  }
  for (auto [a, b] : p.covers)
    if (where[a] >= 0 && where[b] >= 0) out.covers.emplace_back(where[a], where[b]);
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

bool is_order_ideal(const RankedPoset& p, const std::vector<char>& member) {
  if (static_cast<int>(member.size()) != p.size())
    throw std::invalid_argument("is_order_ideal: mask size mismatch");
  for (auto [lo, hi] : p.covers)
    if (member[hi] && !member[lo]) return false;
  return true;
}

}  // namespace absord
