#include "absord/alternating.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace absord {

AlternatingContext make_alternating(const GroupUniverse& U, int s0) {
  if (s0 < 0 || s0 >= U.size() || U.lengths[s0] != 1)
    throw std::invalid_argument("s0 must be a reflection of the group");

  AlternatingContext A;
  A.U = &U;
  A.s0 = s0;
  A.local.assign(U.size(), -1);
  for (int w = 0; w < U.size(); ++w)
    if (U.lengths[w] % 2 == 0) {
      A.local[w] = static_cast<int>(A.members.size());
      A.members.push_back(w);
    }

  std::set<int> twisted;
  for (int t : U.reflections) twisted.insert(U.mul(s0, t));
  A.twisted.assign(twisted.begin(), twisted.end());

  A.lengths.assign(A.members.size(), -1);
  A.lengths[A.local[0]] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int tau : A.twisted) {
      int next = U.mul(tau, cur);
      if (A.local[next] == -1) throw std::logic_error("twisted product left the even part");
      if (A.lengths[A.local[next]] == -1) {
        A.lengths[A.local[next]] = A.lengths[A.local[cur]] + 1;
        queue.push_back(next);
      }
    }
  }
  for (int len : A.lengths)
    if (len == -1) throw std::logic_error("twisted generators do not reach the even part");
  return A;
}

RankedPoset alternating_poset(const AlternatingContext& A) {
  const GroupUniverse& U = *A.U;
  RankedPoset p;
  for (size_t i = 0; i < A.members.size(); ++i) {
    p.labels.push_back(to_string(U.elems[A.members[i]]));
    p.ranks.push_back(A.lengths[i]);
  }
  for (size_t i = 0; i < A.members.size(); ++i)
    for (int tau : A.twisted) {
      int v = A.local[U.mul(tau, A.members[i])];
      if (A.lengths[v] == A.lengths[i] + 1) p.covers.emplace_back(static_cast<int>(i), v);
    }
  std::sort(p.covers.begin(), p.covers.end());
  p.covers.erase(std::unique(p.covers.begin(), p.covers.end()), p.covers.end());
  return p;
}

IntPolynomial alternating_rank_poly(const AlternatingContext& A) {
  return IntPolynomial::from_counts(A.lengths);
}

bool length_dichotomies_hold(const AlternatingContext& A) {
  const GroupUniverse& U = *A.U;
  for (size_t i = 0; i < A.members.size(); ++i) {
    int w = A.members[i];
    int twisted_len = A.lengths[i];
    int plain = U.lengths[w];
    int left = U.lengths[U.mul(A.s0, w)];
    int right = U.lengths[U.mul(w, A.s0)];
    bool even = twisted_len % 2 == 0;
    if (even != (plain < left)) return false;
    if (even != (plain < right)) return false;
    if (twisted_len != (even ? plain : plain - 1)) return false;
    if (std::min(plain, right) != twisted_len) return false;
  }
  return true;
}

std::vector<int> fold_map(const AlternatingContext& A, const CosetPoset& halves) {
  const GroupUniverse& U = *A.U;
  std::vector<int> coset_of(U.size(), -1);
  for (size_t c = 0; c < halves.cosets.size(); ++c)
    for (int w : halves.cosets[c]) coset_of[w] = static_cast<int>(c);

  std::vector<int> map(A.members.size());
  for (size_t i = 0; i < A.members.size(); ++i) {
    int w = A.members[i];
    int target = A.lengths[i] % 2 == 0 ? w : U.conj(A.s0, w);
    map[i] = coset_of[target];
  }
  return map;
}

std::vector<int> ascent_set(const GroupUniverse& U, int s0) {
  std::vector<int> out;
  for (int w = 0; w < U.size(); ++w)
    if (U.lengths[U.mul(w, s0)] > U.lengths[w]) out.push_back(w);
  return out;
}

std::vector<int> twisted_reflection_set(const GroupUniverse& U, int s0) {
  std::set<int> twisted;
  for (int t : U.reflections) twisted.insert(U.mul(s0, t));
  return {twisted.begin(), twisted.end()};
}

std::vector<int> odd_palindromes(const GroupUniverse& U, int s0, int max_half) {
  std::set<int> alphabet;
  for (const GroupElement& s : simple_generators(U.desc)) {
    int g = U.mul(s0, U.id(s));
    alphabet.insert(g);
    alphabet.insert(U.inv(g));
  }

  std::set<int> values;
  std::set<std::pair<int, int>> level{{0, 0}};  // (prefix product, reversed product)
  for (int half = 0; half <= max_half; ++half) {
    for (const auto& [p, r] : level)
      for (int c : alphabet) values.insert(U.mul(p, U.mul(c, r)));
    if (half == max_half) break;
    std::set<std::pair<int, int>> next;
    for (const auto& [p, r] : level)
      for (int x : alphabet) next.emplace(U.mul(p, x), U.mul(x, r));
    level = std::move(next);
  }
  return {values.begin(), values.end()};
}

}  // namespace absord
