#include "absord/cosets.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace absord {

int GroupContext::local_index(int parent) const {
  auto it = local.find(parent);
  if (it == local.end()) throw std::invalid_argument("element not in this group context");
  return it->second;
}

namespace {

GroupContext make_context(const GroupUniverse& U, std::vector<int> members,
                          std::vector<int> reflections) {
  GroupContext G;
  G.U = &U;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members[0] != 0)
    throw std::invalid_argument("group context must contain the identity");
  G.members = std::move(members);
  for (size_t i = 0; i < G.members.size(); ++i) G.local[G.members[i]] = static_cast<int>(i);
  for (int t : reflections)
    if (!G.local.count(t)) throw std::invalid_argument("reflection outside the member set");
  G.reflections = std::move(reflections);

  G.lengths.assign(G.members.size(), -1);
  G.lengths[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int t : G.reflections) {
      int next_parent = U.mul(t, G.members[cur]);
      auto it = G.local.find(next_parent);
      if (it == G.local.end())
        throw std::invalid_argument("member set is not closed under the reflections");
      if (G.lengths[it->second] == -1) {
        G.lengths[it->second] = G.lengths[cur] + 1;
        queue.push_back(it->second);
      }
    }
  }
  for (int len : G.lengths)
    if (len == -1) throw std::invalid_argument("reflections do not generate the member set");
  return G;
}

}  // namespace

GroupContext full_context(const GroupUniverse& U) {
  std::vector<int> members(U.elems.size());
  for (size_t i = 0; i < members.size(); ++i) members[i] = static_cast<int>(i);
  return make_context(U, std::move(members), U.reflections);
}

GroupContext sub_context(const GroupUniverse& U, std::vector<int> members,
                         std::vector<int> reflections) {
  return make_context(U, std::move(members), std::move(reflections));
}

bool absolute_leq(const GroupContext& G, int u, int w) {
  int quotient = G.U->mul(w, G.U->inv(u));
  return G.length_of(u) + G.length_of(quotient) == G.length_of(w);
}

std::vector<std::vector<int>> enumerate_cosets(const GroupContext& G,
                                               const std::vector<int>& subgroup) {
  for (int h : subgroup) G.local_index(h);
  std::vector<char> seen(G.U->elems.size(), 0);
  std::vector<std::vector<int>> cosets;
  for (int w : G.members) {
    if (seen[w]) continue;
    std::vector<int> coset;
    coset.reserve(subgroup.size());
    for (int h : subgroup) {
      int wh = G.U->mul(w, h);
      if (seen[wh]) throw std::invalid_argument("subgroup set is not closed under products");
      seen[wh] = 1;
      coset.push_back(wh);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

std::vector<int> coset_min_length_elements(const GroupContext& G,
                                           const std::vector<int>& coset) {
  int best = -1;
  for (int w : coset) {
    int len = G.length_of(w);
    if (best == -1 || len < best) best = len;
  }
  std::vector<int> reps;
  for (int w : coset)
    if (G.length_of(w) == best) reps.push_back(w);
  return reps;
}

std::optional<int> coset_minimum(const GroupContext& G, const std::vector<int>& coset) {
  for (int m : coset_min_length_elements(G, coset)) {
    bool dominates = true;
    for (int w : coset)
      if (!absolute_leq(G, m, w)) {
        dominates = false;
        break;
      }
    if (dominates) return m;
  }
  return std::nullopt;
}

ModularityReport check_modular(const GroupContext& G, const std::vector<int>& subgroup) {
  ModularityReport report;
  report.cosets = enumerate_cosets(G, subgroup);
  report.modular = true;

  std::vector<int> group_lengths, subgroup_lengths, quotient_lengths;
  for (int w : G.members) group_lengths.push_back(G.length_of(w));
  for (int h : subgroup) subgroup_lengths.push_back(G.length_of(h));

  for (size_t i = 0; i < report.cosets.size(); ++i) {
    const auto& coset = report.cosets[i];
    report.min_length_reps.push_back(coset_min_length_elements(G, coset));
    quotient_lengths.push_back(G.length_of(report.min_length_reps.back().front()));
    report.minima.push_back(coset_minimum(G, coset));
    if (!report.minima.back()) {
      report.modular = false;
      if (!report.witness_coset) report.witness_coset = static_cast<int>(i);
    }
  }

  report.group_poly = IntPolynomial::from_counts(group_lengths);
  report.subgroup_poly = IntPolynomial::from_counts(subgroup_lengths);
  report.quotient_poly = IntPolynomial::from_counts(quotient_lengths);
  report.factorization_holds =
      report.group_poly == report.subgroup_poly * report.quotient_poly;
  return report;
}

QuasiModularityReport check_quasi_modular(const GroupContext& G,
                                          const std::vector<int>& subgroup,
                                          const std::vector<int>& own_reflections) {
  GroupContext H = sub_context(*G.U, subgroup, own_reflections);
  QuasiModularityReport report;

  std::vector<int> group_lengths, own_lengths, quotient_lengths;
  for (int w : G.members) group_lengths.push_back(G.length_of(w));
  for (size_t i = 0; i < H.members.size(); ++i) own_lengths.push_back(H.lengths[i]);
  for (const auto& coset : enumerate_cosets(G, subgroup))
    quotient_lengths.push_back(G.length_of(coset_min_length_elements(G, coset).front()));

  report.group_poly = IntPolynomial::from_counts(group_lengths);
  report.subgroup_own_poly = IntPolynomial::from_counts(own_lengths);
  report.quotient_poly = IntPolynomial::from_counts(quotient_lengths);
  report.quasi_modular =
      report.group_poly == report.subgroup_own_poly * report.quotient_poly;
  return report;
}

std::vector<int> minimum_section(const GroupContext& G, const ModularityReport& report) {
  if (!report.modular)
    throw std::invalid_argument("minimum_section requires a modular subgroup");
  std::vector<int> section(G.members.size(), -1);
  for (size_t i = 0; i < report.cosets.size(); ++i)
    for (int w : report.cosets[i]) section[G.local_index(w)] = *report.minima[i];
  return section;
}

bool minima_form_ideal(const GroupContext& G, const ModularityReport& report) {
  if (!report.modular)
    throw std::invalid_argument("minima_form_ideal requires a modular subgroup");
  std::vector<char> is_min(G.U->elems.size(), 0);
  for (const auto& m : report.minima) is_min[*m] = 1;
  for (const auto& m : report.minima)
    for (int u : G.members)
      if (!is_min[u] && absolute_leq(G, u, *m)) return false;
  return true;
}

RankedPoset group_poset(const GroupUniverse& U) {
  ActionSpace space;
  space.base = 0;
  for (const GroupElement& w : U.elems) space.labels.push_back(to_string(w));
  for (int t : U.reflections) {
    std::vector<int> image(U.elems.size());
    for (size_t w = 0; w < U.elems.size(); ++w)
      image[w] = U.mul(t, static_cast<int>(w));
    space.gen_images.push_back(std::move(image));
  }
  return build_absolute_order(space);
}

CosetPoset coset_poset(const GroupUniverse& U, const std::vector<int>& subgroup) {
  GroupContext G = full_context(U);
  CosetPoset result;
  result.cosets = enumerate_cosets(G, subgroup);

  std::vector<int> coset_of(U.elems.size(), -1);
  for (size_t i = 0; i < result.cosets.size(); ++i)
    for (int w : result.cosets[i]) coset_of[w] = static_cast<int>(i);

  ActionSpace space;
  space.base = 0;
  for (const auto& coset : result.cosets) {
    std::optional<int> min = coset_minimum(G, coset);
    int rep = min ? *min : -1;
    if (rep == -1) {
      std::vector<int> shortest = coset_min_length_elements(G, coset);
      rep = *std::min_element(shortest.begin(), shortest.end(), [&](int a, int b) {
        return one_line_less(U.elems[a], U.elems[b]);
      });
    }
    space.labels.push_back(to_string(U.elems[rep]));
  }
  for (int t : U.reflections) {
    std::vector<int> image(result.cosets.size());
    for (size_t i = 0; i < result.cosets.size(); ++i)
      image[i] = coset_of[U.mul(t, result.cosets[i][0])];
    space.gen_images.push_back(std::move(image));
  }
  result.poset = build_absolute_order(space);
  return result;
}

RankedPoset induced_subposet(const RankedPoset& p, const std::vector<int>& members) {
  UpSets up(p);
  int m = static_cast<int>(members.size());
  RankedPoset q;
  int min_rank = -1;
  for (int w : members) {
    q.labels.push_back(p.labels[w]);
    if (min_rank == -1 || p.ranks[w] < min_rank) min_rank = p.ranks[w];
  }
  for (int w : members) q.ranks.push_back(p.ranks[w] - min_rank);

  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[i][j] = i != j && up.leq(members[i], members[j]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!leq[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < m && covered; ++k)
        if (leq[i][k] && leq[k][j]) covered = false;
      if (covered) q.covers.emplace_back(i, j);
    }
  std::sort(q.covers.begin(), q.covers.end());
  return q;
}

Flat subgroup_moved_span(const GroupUniverse& U, const std::vector<int>& members) {
  int dim = static_cast<int>(reflection_matrix(U.desc, U.elems[0]).size());
  Flat total = Flat::zero(dim);
  for (int w : members) total = flat_sum(total, moved_space(U.desc, U.elems[w]));
  return total;
}

}  // namespace absord
