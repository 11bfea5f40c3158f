#include "absord/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace absord {

int GroupUniverse::id(const GroupElement& w) const {
  auto it = index.find(w);
  return it == index.end() ? -1 : it->second;
}

int GroupUniverse::mul(int a, int b) const {
  if (!mul_table.empty()) return mul_table[static_cast<size_t>(a) * size() + b];
  int r = id(compose(elems[a], elems[b]));
  if (r < 0) throw std::logic_error("GroupUniverse: product left the universe");
  return r;
}

int GroupUniverse::inv(int a) const {
  if (!inv_table.empty()) return inv_table[a];
  int r = id(inverse(elems[a]));
  if (r < 0) throw std::logic_error("GroupUniverse: inverse left the universe");
  return r;
}

int GroupUniverse::conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

GroupUniverse enumerate_group(const CoxeterDescriptor& desc) {
  GroupUniverse U;
  U.desc = desc;
  ReflectionSet refl = reflections(desc);
  U.refl_kind = refl.kind;

  GroupElement e = desc.identity_element();
  U.elems.push_back(e);
  U.index.emplace(e, 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const GroupElement& t : refl.elements) {
      GroupElement next = compose(t, U.elems[cur]);
      auto [it, inserted] = U.index.emplace(next, U.size());
      if (inserted) {
        U.elems.push_back(std::move(next));
        queue.push_back(it->second);
      }
    }
  }
  if (U.size() != desc.order())
    throw std::logic_error("enumerate_group: closure size disagrees with the group order");

  U.lengths.reserve(U.size());
  for (const GroupElement& w : U.elems) U.lengths.push_back(absolute_length(desc, w));
  U.reflections.reserve(refl.elements.size());
  for (const GroupElement& t : refl.elements) U.reflections.push_back(U.id(t));

  if (U.size() <= 1200) {
    U.inv_table.resize(U.size());
    for (int a = 0; a < U.size(); ++a) U.inv_table[a] = U.id(inverse(U.elems[a]));
    U.mul_table.resize(static_cast<size_t>(U.size()) * U.size());
    for (int a = 0; a < U.size(); ++a)
      for (int b = 0; b < U.size(); ++b)
        U.mul_table[static_cast<size_t>(a) * U.size() + b] = U.id(compose(U.elems[a], U.elems[b]));
  }
  return U;
}

std::vector<int> bfs_distances(const GroupUniverse& U, const std::vector<int>& gens, int start) {
  std::vector<int> dist(U.size(), -1);
  dist[start] = 0;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int g : gens) {
      int next = U.mul(g, cur);
      if (dist[next] < 0) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

int absolute_length_bfs(const std::vector<GroupElement>& elements, const ReflectionSet& gens,
                        const GroupElement& w) {
  std::unordered_map<GroupElement, int, ElemHash> index;
  for (size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<int>(i));
  auto at = [&](const GroupElement& x) {
    auto it = index.find(x);
    if (it == index.end())
      throw std::invalid_argument("absolute_length_bfs: product escapes the element set");
    return it->second;
  };

  int target = -1;
  if (auto it = index.find(w); it != index.end()) target = it->second;
  if (target < 0) throw std::invalid_argument("absolute_length_bfs: w is not in the element set");

  GroupElement e = elements.empty() ? w : elements.front();
  e = inverse(w);
  e = compose(w, e);  // identity of the right kind
  std::vector<int> dist(elements.size(), -1);
  int start = at(e);
  dist[start] = 0;
  if (start == target) return 0;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const GroupElement& t : gens.elements) {
      int next = at(compose(t, elements[cur]));
      if (dist[next] < 0) {
        dist[next] = dist[cur] + 1;
        if (next == target) return dist[next];
        queue.push_back(next);
      }
    }
  }
  throw std::invalid_argument("absolute_length_bfs: w is not reachable from the generators");
}

std::vector<int> subgroup_closure(const GroupUniverse& U, const std::vector<int>& gens) {
  std::set<int> members{0};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int g : gens) {
      int next = U.mul(g, cur);
      if (members.insert(next).second) queue.push_back(next);
    }
  }
  return {members.begin(), members.end()};
}

std::vector<std::vector<int>> all_subgroups(const GroupUniverse& U) {
  // two elements generating the same cyclic subgroup extend any H to the
  // same closure, so it suffices to try the least generator of each
  std::vector<int> canonical;
  {
    std::set<std::vector<int>> cyclic;
    for (int g = 1; g < U.size(); ++g)
      if (cyclic.insert(subgroup_closure(U, {g})).second) canonical.push_back(g);
  }
  // grow subgroups one generator at a time, carrying a small generating set
  std::set<std::vector<int>> seen;
  std::deque<std::pair<std::vector<int>, std::vector<int>>> frontier;  // (members, gens)
  std::vector<int> trivial{0};
  seen.insert(trivial);
  frontier.emplace_back(trivial, std::vector<int>{});
  while (!frontier.empty()) {
    auto [H, gens] = std::move(frontier.front());
    frontier.pop_front();
    std::vector<char> in(U.size(), 0);
    for (int x : H) in[x] = 1;
    for (int g : canonical) {
      if (in[g]) continue;
      std::vector<int> next_gens = gens;
      next_gens.push_back(g);
      std::vector<int> K = subgroup_closure(U, next_gens);
      if (seen.insert(K).second) frontier.emplace_back(std::move(K), std::move(next_gens));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> reflection_subgroups(const GroupUniverse& U) {
  std::set<std::vector<int>> seen;
  size_t m = U.reflections.size();
  if (m > 20) throw std::invalid_argument("reflection_subgroups: too many reflections");
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    std::vector<int> gens;
    for (size_t i = 0; i < m; ++i)
      if (mask & (size_t{1} << i)) gens.push_back(U.reflections[i]);
    seen.insert(subgroup_closure(U, gens));
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> subgroup_conjugacy_reps(const GroupUniverse& U,
                                                      const std::vector<std::vector<int>>& subs) {
  std::map<std::vector<int>, std::vector<int>> canonical;  // class key -> first seen member
  std::vector<std::vector<int>> reps;
  for (const auto& H : subs) {
    std::vector<int> best;
    for (int g = 0; g < U.size(); ++g) {
      std::vector<int> img;
      img.reserve(H.size());
      for (int x : H) img.push_back(U.conj(g, x));
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = std::move(img);
    }
    auto [it, inserted] = canonical.emplace(std::move(best), H);
    if (inserted) reps.push_back(H);
  }
  return reps;
}

std::vector<std::vector<int>> reflection_conjugacy_classes(const GroupUniverse& U) {
  std::vector<std::vector<int>> classes;
  std::set<int> remaining(U.reflections.begin(), U.reflections.end());
  while (!remaining.empty()) {
    int t = *remaining.begin();
    std::set<int> orbit;
    std::deque<int> queue{t};
    orbit.insert(t);
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (int g = 0; g < U.size(); ++g) {
        int c = U.conj(g, cur);
        if (orbit.insert(c).second) queue.push_back(c);
      }
    }
    classes.emplace_back(orbit.begin(), orbit.end());
    for (int x : orbit) remaining.erase(x);
  }
  return classes;
}

}  // namespace absord
