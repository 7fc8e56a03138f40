#include "qlattice/normalize.hpp"

#include <algorithm>

#include "qlattice/patterns.hpp"

namespace qlat {

bool check_normalized_matching(const GradedPoset& p, int i, const Bitset& a) {
  if (i <= 0 || i > p.rank()) throw bad_level("check_normalized_matching: bad level");
  Bitset shadow_bits(p.size());
  int a_count = 0;
  bool level_ok = true;
  a.for_each([&](int id) {
    if (p.level_of(id) != i) level_ok = false;
    ++a_count;
    for (int d : p.covers_down(id)) shadow_bits.set(d);
  });
  if (!level_ok) throw bad_level("check_normalized_matching: subset not within level");
  // |shadow(A)| / r_{i-1} >= |A| / r_i, cross-multiplied in exact integers
  Int lhs = Int(shadow_bits.count()) * p.rank_number(i);
  Int rhs = Int(a_count) * p.rank_number(i - 1);
  return lhs >= rhs;
}

Rat lym_sum(const Family& f) {
  Rat sum = 0;
  for (int id : f.members())
    sum += make_rat(Int(1), Int(f.poset().rank_number(f.poset().level_of(id))));
  return sum;
}

namespace {

Family members_at(const Family& q, int i) {
  Family b(q.poset());
  for (int id : q.members_at_level(i)) b.add(id);
  return b;
}

}  // namespace

PushReport push_top_to_shadow(const Family& q, int i, int u) {
  const GradedPoset& p = q.poset();
  if (i <= 0 || i > p.rank()) throw bad_level("push_top_to_shadow: bad level");
  if (q.max_level() > i)
    throw level_violation("push_top_to_shadow: members above level " +
                          std::to_string(i));

  PushReport rep{q, Family(p), i, 0, Rat(0), false, true, {}};
  Family b = members_at(q, i);
  rep.replaced = b.size();
  rep.alpha = make_rat(Int(p.rank_number(i - 1)), Int(p.rank_number(i))) - u;

  Family out = q;
  for (int id : b.members()) out.remove(id);
  for (int id : b.members())
    for (int d : p.covers_down(id)) out.add(d);
  rep.output = out;

  bool was_free = !contains_pattern(q, PatternSpec::broom(u));
  rep.bound_applicable = was_free && rep.alpha >= 0;
  if (rep.bound_applicable)
    rep.size_bound_ok = Rat(out.size() - q.size()) >= rep.alpha * rep.replaced;
  return rep;
}

namespace {

enum class PushDir { Down, Up };

PushReport push_matched(const Family& q, int i, int u, int v, PushDir dir) {
  const GradedPoset& p = q.poset();
  const char* what = dir == PushDir::Down ? "pushdown_matched" : "pushup_matched";
  if (dir == PushDir::Down && (i <= 0 || i > p.rank()))
    throw bad_level(std::string(what) + ": bad level");
  if (dir == PushDir::Up && (i < 0 || i >= p.rank()))
    throw bad_level(std::string(what) + ": bad level");
  if (dir == PushDir::Down && q.max_level() > i)
    throw level_violation(std::string(what) + ": members above level " +
                          std::to_string(i));
  if (dir == PushDir::Up && !q.empty() && q.min_level() < i)
    throw level_violation(std::string(what) + ": members below level " +
                          std::to_string(i));

  const std::vector<PatternSpec> pats = {PatternSpec::broom(u),
                                         PatternSpec::fork(v)};
  if (!free_of(q, pats))
    throw bad_structure(std::string(what) + ": input is not broom/fork free");

  const int adj_level = dir == PushDir::Down ? i - 1 : i + 1;
  Rat ratio = make_rat(Int(p.rank_number(adj_level)), Int(p.rank_number(i)));
  const int need = dir == PushDir::Down ? u : v;
  if (ratio < need)
    throw precondition_ratio(std::string(what) + ": rank ratio below " +
                             std::to_string(need));

  PushReport rep{q, Family(p), i, 0, ratio - need, true, true, {}};
  Family b = members_at(q, i);
  rep.replaced = b.size();
  if (b.empty()) {
    rep.output = q;
    return rep;
  }

  // bipartite: B against (shadow(B) or shade(B)) minus Q, edges = covers
  std::vector<int> left = b.members();
  Bitset cand(p.size());
  for (int id : left) {
    const auto& nbrs =
        dir == PushDir::Down ? p.covers_down(id) : p.covers_up(id);
    for (int x : nbrs)
      if (!q.member(x)) cand.set(x);
  }
  std::vector<int> right = cand.to_vector();
  std::vector<int> right_index(p.size(), -1);
  for (std::size_t r = 0; r < right.size(); ++r) right_index[right[r]] = static_cast<int>(r);

  std::vector<std::vector<int>> adj(left.size());
  for (std::size_t li = 0; li < left.size(); ++li) {
    const auto& nbrs = dir == PushDir::Down ? p.covers_down(left[li])
                                            : p.covers_up(left[li]);
    for (int x : nbrs)
      if (right_index[x] >= 0) adj[li].push_back(right_index[x]);
  }

  auto pairs = max_bipartite_matching(static_cast<int>(left.size()),
                                      static_cast<int>(right.size()), adj);
  if (pairs.size() != left.size())
    throw matching_failure(std::string(what) +
                           ": Hall matching incomplete (this is a bug: the "
                           "marriage condition is guaranteed here)");

  Family out = q;
  for (auto [li, ri] : pairs) {
    out.remove(left[li]);
    out.add(right[ri]);
    rep.matching.emplace_back(left[li], right[ri]);
  }
  rep.output = out;

  if (out.size() != q.size())
    throw matching_failure(std::string(what) + ": size not preserved");
  if (!free_of(out, pats))
    throw matching_failure(std::string(what) + ": output lost freeness");
  return rep;
}

}  // namespace

PushReport pushdown_matched(const Family& q, int i, int u, int v) {
  return push_matched(q, i, u, v, PushDir::Down);
}

PushReport pushup_matched(const Family& q, int i, int u, int v) {
  return push_matched(q, i, u, v, PushDir::Up);
}

Family normalize_to_middle(const LinearLattice& l, const Family& q, int u, int v) {
  const int n = l.n(), qq = l.q();
  if (!free_of(q, {PatternSpec::broom(u), PatternSpec::fork(v)}))
    throw bad_structure("normalize_to_middle: input is not broom/fork free");

  // lowest level still pushed down: least i with q^{2i-n-1} >= u
  int push_down_to = n + 1;
  for (int i = 1; i <= n; ++i)
    if (2 * i - n - 1 >= 0 && int_pow(qq, 2 * i - n - 1) >= u) {
      push_down_to = i;
      break;
    }
  // highest level still pushed up: greatest i with q^{n-2i-1} >= v
  int push_up_to = -1;
  for (int i = n - 1; i >= 0; --i)
    if (n - 2 * i - 1 >= 0 && int_pow(qq, n - 2 * i - 1) >= v) {
      push_up_to = i;
      break;
    }
  // the two phases may not cross (possible only in the degenerate u = v = 1,
  // n odd case, where the corollary's window is empty)
  push_up_to = std::min(push_up_to, push_down_to - 2);

  Family cur = q;
  for (int i = n; i >= push_down_to; --i)
    cur = pushdown_matched(cur, i, u, v).output;
  for (int i = 0; i <= push_up_to; ++i)
    cur = pushup_matched(cur, i, u, v).output;
  return cur;
}

std::vector<std::pair<int, int>> max_bipartite_matching(
    int n_left, int n_right, const std::vector<std::vector<int>>& adj) {
  std::vector<int> match_r(n_right, -1), match_l(n_left, -1);
  std::vector<char> vis(n_right, 0);

  auto augment = [&](auto&& self, int l) -> bool {
    for (int r : adj[l]) {
      if (vis[r]) continue;
      vis[r] = 1;
      if (match_r[r] < 0 || self(self, match_r[r])) {
        match_r[r] = l;
        match_l[l] = r;
        return true;
      }
    }
    return false;
  };

  for (int l = 0; l < n_left; ++l) {
    std::fill(vis.begin(), vis.end(), 0);
    augment(augment, l);
  }

  std::vector<std::pair<int, int>> out;
  for (int l = 0; l < n_left; ++l)
    if (match_l[l] >= 0) out.emplace_back(l, match_l[l]);
  return out;
}

TwoAntichainReport two_antichain_inequality(
    const LinearLattice& l, const Family& m, const Family& a,
    const std::vector<std::pair<int, int>>& f) {
  require_same_poset(m, a, "two_antichain_inequality");
  if (m.poset().identity() != l.identity())
    throw lattice_mismatch("two_antichain_inequality: family not over this lattice");

  if (m.bits().intersects(a.bits()))
    throw bad_structure("two_antichain_inequality: M and A intersect");
  for (int x : {l.zero_id(), l.full_id()})
    if (m.member(x) || a.member(x))
      throw bad_structure("two_antichain_inequality: extremes not allowed");
  for (int x : m.members())
    if (l.comp_set(x).intersects(m.bits()))
      throw bad_structure("two_antichain_inequality: M is not an antichain");
  for (int x : a.members())
    if (l.comp_set(x).intersects(a.bits()))
      throw bad_structure("two_antichain_inequality: A is not an antichain");

  std::vector<int> f_of(l.size(), -1);
  for (auto [aid, mid] : f) {
    if (!a.member(aid) || !m.member(mid) || f_of[aid] != -1)
      throw bad_structure("two_antichain_inequality: f is not a map A -> M");
    f_of[aid] = mid;
  }
  int side = 0;  // +1: all a < f(a); -1: all a > f(a)
  for (int aid : a.members()) {
    int mid = f_of[aid];
    if (mid < 0) throw bad_structure("two_antichain_inequality: f misses a member");
    if (l.comp_set(aid).and_count(m.bits()) != 1 || !l.comp_set(aid).test(mid))
      throw bad_structure(
          "two_antichain_inequality: comparable element not unique");
    int s = l.less(aid, mid) ? +1 : -1;
    if (side == 0) side = s;
    if (s != side)
      throw bad_structure("two_antichain_inequality: mixed comparability sides");
  }

  TwoAntichainReport rep;
  rep.lhs = 0;
  for (int x : m.members())
    rep.lhs += make_rat(Int(1), gaussian(l.n(), l.level_of(x), l.q()));
  Rat weight = make_rat(l.q(), l.q() + 1);
  for (int x : a.members())
    rep.lhs += weight * make_rat(Int(1), gaussian(l.n(), l.level_of(x), l.q()));
  rep.holds = rep.lhs <= 1;
  return rep;
}

LymTypeReport lym_type_check(const LinearLattice& l, const Family& f) {
  if (f.poset().identity() != l.identity())
    throw lattice_mismatch("lym_type_check: family not over this lattice");
  if (f.member(l.zero_id()) || f.member(l.full_id()))
    throw not_y_free("lym_type_check: family touches {0} or the full space");
  if (contains_pattern(f, PatternSpec::y()) ||
      contains_pattern(f, PatternSpec::yprime()))
    throw not_y_free("lym_type_check: family contains Y or Y'");

  LymTypeReport rep;
  rep.sum = 0;
  for (int x : f.members())
    rep.sum += make_rat(Int(1), gaussian(l.n(), l.level_of(x), l.q()));
  rep.holds = rep.sum <= 2;
  rep.equality_structure = true;
  if (rep.sum == 2) {
    for (int x : f.members()) {
      bool has_up = l.up_set(x).intersects(f.bits());
      bool has_down = l.down_set(x).intersects(f.bits());
      if (has_up && has_down) {
        rep.equality_structure = false;
        break;
      }
    }
  }
  return rep;
}

long k_delta(std::vector<Rat> s, const Rat& delta) {
  if (delta < 0) throw domain_error("k_delta: delta must be nonnegative");
  for (const Rat& x : s)
    if (x < 0) throw domain_error("k_delta: values must be nonnegative");
  std::sort(s.begin(), s.end());
  Rat acc = 0;
  long count = 0;
  for (const Rat& x : s) {
    acc += x;
    if (acc > delta) break;
    ++count;
  }
  return count;
}

namespace {

// Degenerate single-level posets (antichains, singletons) count as two-level
// with one side empty.
void require_two_level(const GradedPoset& p, const char* what) {
  if (p.rank() > 1) throw not_two_level(std::string(what) + ": poset rank > 1");
}

}  // namespace

ChainPartition dilworth_two_level_partition(
    const GradedPoset& p, std::optional<std::pair<int, int>> pin) {
  require_two_level(p, "dilworth_two_level_partition");
  static const std::vector<int> kEmpty;
  const auto& bottoms = p.level(0);
  const auto& tops = p.rank() >= 1 ? p.level(1) : kEmpty;
  std::vector<int> bottom_index(p.size(), -1), top_index(p.size(), -1);
  for (std::size_t i = 0; i < bottoms.size(); ++i) bottom_index[bottoms[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < tops.size(); ++i) top_index[tops[i]] = static_cast<int>(i);

  auto adjacency = [&](const Bitset* skip) {
    std::vector<std::vector<int>> adj(bottoms.size());
    for (std::size_t i = 0; i < bottoms.size(); ++i) {
      if (skip && skip->test(bottoms[i])) continue;
      for (int t : p.covers_up(bottoms[i]))
        if (!skip || !skip->test(t)) adj[i].push_back(top_index[t]);
    }
    return adj;
  };

  auto full = max_bipartite_matching(static_cast<int>(bottoms.size()),
                                     static_cast<int>(tops.size()), adjacency(nullptr));
  ChainPartition out;
  out.width = p.size() - static_cast<int>(full.size());

  std::vector<std::pair<int, int>> pairs;
  Bitset pinned(p.size());
  if (pin) {
    auto [x, y] = *pin;
    if (p.level_of(x) > p.level_of(y)) std::swap(x, y);
    if (p.level_of(x) != 0 || p.level_of(y) != 1 || !p.less(x, y))
      throw bad_structure("dilworth: pin is not a comparable bottom/top pair");
    pinned.set(x);
    pinned.set(y);
    auto rest = max_bipartite_matching(static_cast<int>(bottoms.size()),
                                       static_cast<int>(tops.size()), adjacency(&pinned));
    pairs.emplace_back(bottom_index[x], top_index[y]);
    for (auto pr : rest) pairs.push_back(pr);
  } else {
    pairs = full;
  }

  Bitset covered(p.size());
  for (auto [bi, ti] : pairs) {
    out.chains.push_back({bottoms[bi], tops[ti]});
    covered.set(bottoms[bi]);
    covered.set(tops[ti]);
  }
  for (int v = 0; v < p.size(); ++v)
    if (!covered.test(v)) out.chains.push_back({v});

  if (static_cast<int>(out.chains.size()) != out.width)
    throw matching_failure("dilworth: pinned partition misses the optimum width");
  return out;
}

std::pair<ExplicitPoset, std::vector<int>> two_level_view(const GradedPoset& p,
                                                          int k_lo, int k_hi) {
  if (k_lo < 0 || k_hi > p.rank() || k_lo >= k_hi)
    throw bad_level("two_level_view: need 0 <= k_lo < k_hi <= rank");
  const auto& bottoms = p.level(k_lo);
  const auto& tops = p.level(k_hi);
  std::vector<int> orig;
  orig.insert(orig.end(), bottoms.begin(), bottoms.end());
  orig.insert(orig.end(), tops.begin(), tops.end());

  std::vector<std::pair<int, int>> edges;
  for (std::size_t b = 0; b < bottoms.size(); ++b)
    for (std::size_t t = 0; t < tops.size(); ++t)
      if (p.less(bottoms[b], tops[t]))
        edges.emplace_back(static_cast<int>(b), static_cast<int>(t));
  ExplicitPoset view = make_two_level(
      static_cast<int>(bottoms.size()), static_cast<int>(tops.size()), edges,
      p.identity() + "|levels(" + std::to_string(k_lo) + "," +
          std::to_string(k_hi) + ")",
      /*nm_hint=*/false);
  return {std::move(view), std::move(orig)};
}

bool hasse_connected(const GradedPoset& p) {
  require_two_level(p, "hasse_connected");
  if (p.size() == 0) return true;
  std::vector<char> seen(p.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : p.covers_up(v))
      if (!seen[w]) seen[w] = 1, stack.push_back(w);
    for (int w : p.covers_down(v))
      if (!seen[w]) seen[w] = 1, stack.push_back(w);
  }
  for (char c : seen)
    if (!c) return false;
  return true;
}

}  // namespace qlat
