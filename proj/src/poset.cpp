#include "qlattice/poset.hpp"

#include <algorithm>
#include <bit>

namespace qlat {

void GradedPoset::finish_build(std::vector<int> level_of,
                               std::vector<std::vector<int>> covers_up,
                               std::string identity, bool nm_hint) {
  const int n = static_cast<int>(level_of.size());
  level_of_ = std::move(level_of);
  covers_up_ = std::move(covers_up);
  identity_ = std::move(identity);
  nm_hint_ = nm_hint;

  int max_level = 0;
  for (int v = 0; v < n; ++v) max_level = std::max(max_level, level_of_[v]);
  levels_.assign(max_level + 1, {});
  for (int v = 0; v < n; ++v) levels_[level_of_[v]].push_back(v);
  for (auto& lv : levels_) std::sort(lv.begin(), lv.end());

  covers_down_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    std::sort(covers_up_[v].begin(), covers_up_[v].end());
    for (int w : covers_up_[v]) {
      if (level_of_[w] != level_of_[v] + 1)
        throw bad_structure("cover edge not between consecutive levels");
      covers_down_[w].push_back(v);
    }
  }
  for (auto& cd : covers_down_) std::sort(cd.begin(), cd.end());

  // Transitive closures, one level at a time.
  up_set_.assign(n, Bitset(n));
  down_set_.assign(n, Bitset(n));
  for (int k = max_level - 1; k >= 0; --k)
    for (int v : levels_[k])
      for (int w : covers_up_[v]) {
        up_set_[v].set(w);
        up_set_[v] |= up_set_[w];
      }
  for (int k = 1; k <= max_level; ++k)
    for (int v : levels_[k])
      for (int u : covers_down_[v]) {
        down_set_[v].set(u);
        down_set_[v] |= down_set_[u];
      }

  comp_set_.assign(n, Bitset(n));
  up_ids_.assign(n, {});
  down_ids_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    comp_set_[v] = up_set_[v];
    comp_set_[v] |= down_set_[v];
    up_ids_[v] = up_set_[v].to_vector();
    down_ids_[v] = down_set_[v].to_vector();
  }
}

BooleanLattice::BooleanLattice(int n) : n_(n) {
  // the comparability closures cost 3 * 4^n bits
  if (n < 1 || n > 12) throw domain_error("BooleanLattice: n out of range");
  const int total = 1 << n;
  masks_.resize(total);
  id_of_.assign(total, -1);
  std::vector<unsigned> order(total);
  for (int m = 0; m < total; ++m) order[m] = static_cast<unsigned>(m);
  std::sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<int> level_of(total);
  for (int id = 0; id < total; ++id) {
    masks_[id] = order[id];
    id_of_[order[id]] = id;
    level_of[id] = std::popcount(order[id]);
  }
  std::vector<std::vector<int>> covers(total);
  for (int id = 0; id < total; ++id) {
    unsigned m = masks_[id];
    for (int b = 0; b < n; ++b)
      if (!(m & (1u << b))) covers[id].push_back(id_of_[m | (1u << b)]);
  }
  finish_build(std::move(level_of), std::move(covers),
               "B(" + std::to_string(n) + ")", /*nm_hint=*/true);
  broom_fork_factor_ = make_rat(1, 2);
  lym_type_bound_ = true;
}

ExplicitPoset make_two_level(int n_bottom, int n_top,
                             const std::vector<std::pair<int, int>>& edges,
                             std::string identity, bool nm_hint) {
  std::vector<int> level_of(n_bottom + n_top, 0);
  for (int t = 0; t < n_top; ++t) level_of[n_bottom + t] = 1;
  std::vector<std::vector<int>> covers(n_bottom + n_top);
  for (auto [b, t] : edges) covers[b].push_back(n_bottom + t);
  return ExplicitPoset(std::move(level_of), std::move(covers), std::move(identity),
                       nm_hint);
}

ExplicitPoset make_pentagon_fixture() {
  // bottom i is below tops i and i+1 (mod 5): 2-regular on both sides
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, i);
    edges.emplace_back(i, (i + 1) % 5);
  }
  return make_two_level(5, 5, edges, "pentagon-2regular", /*nm_hint=*/true);
}

ExplicitPoset make_permuted_copy(const GradedPoset& p, const std::vector<int>& perm,
                                 std::string identity) {
  const int n = p.size();
  std::vector<int> level_of(n);
  std::vector<std::vector<int>> covers(n);
  for (int v = 0; v < n; ++v) {
    level_of[perm[v]] = p.level_of(v);
    for (int w : p.covers_up(v)) covers[perm[v]].push_back(perm[w]);
  }
  return ExplicitPoset(std::move(level_of), std::move(covers), std::move(identity),
                       p.normalized_matching_hint());
}

}  // namespace qlat
