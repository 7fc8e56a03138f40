#include "qlattice/patterns.hpp"

#include <algorithm>
#include <numeric>

namespace qlat {

PatternSpec PatternSpec::broom(int u) {
  if (u < 1) throw bad_pattern("broom: u must be >= 1");
  return {PatternKind::Broom, u, 0, {}};
}

PatternSpec PatternSpec::fork(int v) {
  if (v < 1) throw bad_pattern("fork: v must be >= 1");
  return {PatternKind::Fork, v, 0, {}};
}

PatternSpec PatternSpec::yk(int k) {
  if (k < 0) throw bad_pattern("yk: k must be >= 0");
  return {PatternKind::Yk, k, 0, {}};
}

PatternSpec PatternSpec::ykprime(int k) {
  if (k < 0) throw bad_pattern("ykprime: k must be >= 0");
  return {PatternKind::Ykprime, k, 0, {}};
}

PatternSpec PatternSpec::chain(int members) {
  if (members < 1) throw bad_pattern("chain: length must be >= 1");
  return {PatternKind::Chain, members, 0, {}};
}

PatternSpec PatternSpec::generic(int size, std::vector<std::pair<int, int>> less) {
  if (size < 0 || size > 64) throw bad_pattern("generic: size outside [0,64]");
  // transitive closure; a strict order must stay irreflexive
  std::vector<std::vector<bool>> rel(size, std::vector<bool>(size, false));
  for (auto [a, b] : less) {
    if (a < 0 || b < 0 || a >= size || b >= size)
      throw bad_pattern("generic: relation index out of range");
    rel[a][b] = true;
  }
  for (int m = 0; m < size; ++m)
    for (int a = 0; a < size; ++a)
      if (rel[a][m])
        for (int b = 0; b < size; ++b)
          if (rel[m][b]) rel[a][b] = true;
  std::vector<std::pair<int, int>> closed;
  for (int a = 0; a < size; ++a) {
    if (rel[a][a]) throw bad_pattern("generic: relation has a cycle");
    for (int b = 0; b < size; ++b)
      if (rel[a][b]) closed.emplace_back(a, b);
  }
  PatternSpec p;
  p.kind = PatternKind::Generic;
  p.generic_size = size;
  p.generic_less = std::move(closed);
  return p;
}

PatternSpec PatternSpec::parse(const std::string& name) {
  auto split = [&]() -> std::pair<std::string, int> {
    auto pos = name.find(':');
    if (pos == std::string::npos) return {name, -1};
    try {
      return {name.substr(0, pos), std::stoi(name.substr(pos + 1))};
    } catch (const std::exception&) {
      throw bad_pattern("bad pattern parameter in '" + name + "'");
    }
  };
  auto [base, arg] = split();
  if (base == "wedge") return wedge();
  if (base == "vee") return vee();
  if (base == "butterfly") return butterfly();
  if (base == "y") return y();
  if (base == "yprime") return yprime();
  if (base == "broom") return broom(arg);
  if (base == "fork") return fork(arg);
  if (base == "yk") return yk(arg);
  if (base == "ykprime") return ykprime(arg);
  if (base == "chain") return chain(arg);
  throw bad_pattern("unknown pattern '" + name + "'");
}

std::string PatternSpec::name() const {
  switch (kind) {
    case PatternKind::Broom: return "broom:" + std::to_string(param);
    case PatternKind::Fork: return "fork:" + std::to_string(param);
    case PatternKind::Wedge: return "wedge";
    case PatternKind::Vee: return "vee";
    case PatternKind::Butterfly: return "butterfly";
    case PatternKind::Y: return "y";
    case PatternKind::Yprime: return "yprime";
    case PatternKind::Yk: return "yk:" + std::to_string(param);
    case PatternKind::Ykprime: return "ykprime:" + std::to_string(param);
    case PatternKind::Chain: return "chain:" + std::to_string(param);
    case PatternKind::Generic:
      return "generic[" + std::to_string(generic_size) + "]";
  }
  return "?";
}

int PatternSpec::size() const {
  switch (kind) {
    case PatternKind::Broom:
    case PatternKind::Fork: return param + 1;
    case PatternKind::Wedge:
    case PatternKind::Vee: return 3;
    case PatternKind::Butterfly:
    case PatternKind::Y:
    case PatternKind::Yprime: return 4;
    case PatternKind::Yk:
    case PatternKind::Ykprime: return param + 3;
    case PatternKind::Chain: return param;
    case PatternKind::Generic: return generic_size;
  }
  return 0;
}

PatternSpec PatternSpec::generic_form() const {
  std::vector<std::pair<int, int>> rel;
  switch (kind) {
    case PatternKind::Wedge:
      return PatternSpec::broom(2).generic_form();
    case PatternKind::Vee:
      return PatternSpec::fork(2).generic_form();
    case PatternKind::Broom:
      for (int i = 1; i <= param; ++i) rel.emplace_back(i, 0);
      return generic(param + 1, rel);
    case PatternKind::Fork:
      for (int i = 1; i <= param; ++i) rel.emplace_back(0, i);
      return generic(param + 1, rel);
    case PatternKind::Butterfly:
      rel = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
      return generic(4, rel);
    case PatternKind::Y:
      rel = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 1}};
      return generic(4, rel);
    case PatternKind::Yprime:
      rel = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      return generic(4, rel);
    case PatternKind::Yk: {
      // elements: c_0..c_k are 0..k with c_k < ... < c_0, then a, b above c_0
      const int a = param + 1, b = param + 2;
      for (int j = 0; j <= param; ++j)
        for (int i = 0; i < j; ++i) rel.emplace_back(j, i);
      rel.emplace_back(0, a);
      rel.emplace_back(0, b);
      return generic(param + 3, rel);
    }
    case PatternKind::Ykprime: {
      PatternSpec base = PatternSpec::yk(param).generic_form();
      for (auto& pr : base.generic_less) std::swap(pr.first, pr.second);
      return generic(base.generic_size, base.generic_less);
    }
    case PatternKind::Chain:
      for (int i = 0; i < param; ++i)
        for (int j = i + 1; j < param; ++j) rel.emplace_back(i, j);
      return generic(param, rel);
    case PatternKind::Generic:
      return *this;
  }
  throw bad_pattern("generic_form: unknown kind");
}

namespace {

// Longest chain of family members ending at each member (levels ascending).
// chain_len[x] counts members, including x itself.
std::vector<int> longest_chain_up_to(const Family& f) {
  const GradedPoset& p = f.poset();
  std::vector<int> len(p.size(), 0);
  std::vector<int> mem = f.members();
  std::sort(mem.begin(), mem.end(), [&](int a, int b) {
    return p.level_of(a) != p.level_of(b) ? p.level_of(a) < p.level_of(b) : a < b;
  });
  for (int x : mem) {
    int best = 0;
    for (int y : p.down_ids(x))
      if (f.member(y)) best = std::max(best, len[y]);
    len[x] = best + 1;
  }
  return len;
}

std::vector<int> longest_chain_down_to(const Family& f) {
  const GradedPoset& p = f.poset();
  std::vector<int> len(p.size(), 0);
  std::vector<int> mem = f.members();
  std::sort(mem.begin(), mem.end(), [&](int a, int b) {
    return p.level_of(a) != p.level_of(b) ? p.level_of(a) > p.level_of(b) : a < b;
  });
  for (int x : mem) {
    int best = 0;
    for (int y : p.up_ids(x))
      if (f.member(y)) best = std::max(best, len[y]);
    len[x] = best + 1;
  }
  return len;
}

bool detect_broom(const Family& f, int u) {
  const GradedPoset& p = f.poset();
  for (int x : f.members())
    if (p.down_set(x).and_count(f.bits()) >= u) return true;
  return false;
}

bool detect_fork(const Family& f, int v) {
  const GradedPoset& p = f.poset();
  for (int x : f.members())
    if (p.up_set(x).and_count(f.bits()) >= v) return true;
  return false;
}

bool detect_butterfly(const Family& f) {
  // two distinct members with at least two common strict lower members
  const GradedPoset& p = f.poset();
  std::vector<int> mem = f.members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (f.bits().and_count2(p.down_set(mem[i]), p.down_set(mem[j])) >= 2)
        return true;
  return false;
}

bool detect_y(const Family& f) {
  const GradedPoset& p = f.poset();
  for (int b : f.members())
    if (p.down_set(b).and_count(f.bits()) >= 1 &&
        p.up_set(b).and_count(f.bits()) >= 2)
      return true;
  return false;
}

bool detect_yprime(const Family& f) {
  const GradedPoset& p = f.poset();
  for (int c : f.members())
    if (p.down_set(c).and_count(f.bits()) >= 2 &&
        p.up_set(c).and_count(f.bits()) >= 1)
      return true;
  return false;
}

bool detect_yk(const Family& f, int k) {
  // x topping a chain of k+1 members, with two members strictly above x
  const GradedPoset& p = f.poset();
  std::vector<int> len = longest_chain_up_to(f);
  for (int x : f.members())
    if (len[x] >= k + 1 && p.up_set(x).and_count(f.bits()) >= 2) return true;
  return false;
}

bool detect_ykprime(const Family& f, int k) {
  const GradedPoset& p = f.poset();
  std::vector<int> len = longest_chain_down_to(f);
  for (int x : f.members())
    if (len[x] >= k + 1 && p.down_set(x).and_count(f.bits()) >= 2) return true;
  return false;
}

bool detect_chain(const Family& f, int members) {
  if (members <= 0) return true;
  if (members == 1) return !f.empty();
  std::vector<int> len = longest_chain_up_to(f);
  for (int v : f.members())
    if (len[v] >= members) return true;
  return false;
}

}  // namespace

bool contains_pattern(const Family& f, const PatternSpec& p) {
  if (p.size() > f.size()) return false;
  switch (p.kind) {
    case PatternKind::Broom: return detect_broom(f, p.param);
    case PatternKind::Fork: return detect_fork(f, p.param);
    case PatternKind::Wedge: return detect_broom(f, 2);
    case PatternKind::Vee: return detect_fork(f, 2);
    case PatternKind::Butterfly: return detect_butterfly(f);
    case PatternKind::Y: return detect_y(f);
    case PatternKind::Yprime: return detect_yprime(f);
    case PatternKind::Yk: return detect_yk(f, p.param);
    case PatternKind::Ykprime: return detect_ykprime(f, p.param);
    case PatternKind::Chain: return detect_chain(f, p.param);
    case PatternKind::Generic: return contains_pattern_generic(f, p);
  }
  throw bad_pattern("contains_pattern: unknown kind");
}

bool contains_pattern_generic(const Family& f, const PatternSpec& spec) {
  PatternSpec p = spec.generic_form();
  const int m = p.generic_size;
  if (m == 0) return true;
  if (m > f.size()) return false;
  const GradedPoset& po = f.poset();

  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
  std::vector<int> degree(m, 0);
  for (auto [a, b] : p.generic_less) {
    rel[a][b] = true;
    ++degree[a];
    ++degree[b];
  }
  // static order: most-constrained pattern elements first (result is
  // order-independent; this only prunes)
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return degree[a] != degree[b] ? degree[a] > degree[b] : a < b;
  });

  std::vector<int> assign(m, -1);
  Bitset used(po.size());

  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == m) return true;
    int pv = order[depth];
    Bitset cand = f.bits();
    for (int s = 0; s < depth; ++s) {
      int pu = order[s];
      if (rel[pu][pv])
        cand &= po.up_set(assign[pu]);
      else if (rel[pv][pu])
        cand &= po.down_set(assign[pu]);
    }
    cand.subtract(used);
    bool found = false;
    cand.for_each([&](int id) {
      if (found) return;
      assign[pv] = id;
      used.set(id);
      if (self(self, depth + 1)) found = true;
      used.reset(id);
      assign[pv] = -1;
    });
    return found;
  };
  return dfs(dfs, 0);
}

bool free_of(const Family& f, const std::vector<PatternSpec>& patterns) {
  for (const auto& p : patterns)
    if (contains_pattern(f, p)) return false;
  return true;
}

int comparability_degree(const Family& f, int x) {
  if (!f.member(x)) throw not_member("comparability_degree: x not in family");
  return f.poset().comp_set(x).and_count(f.bits());
}

IncrementalFamily::IncrementalFamily(const GradedPoset& p,
                                     std::vector<PatternSpec> patterns)
    : poset_(&p),
      patterns_(std::move(patterns)),
      bits_(p.size()),
      cnt_up_(p.size(), 0),
      cnt_down_(p.size(), 0) {
  for (const auto& pat : patterns_)
    if (pat.kind == PatternKind::Chain || pat.kind == PatternKind::Yk ||
        pat.kind == PatternKind::Ykprime || pat.kind == PatternKind::Generic)
      needs_full_check_ = true;
}

void IncrementalFamily::add(int v) {
  bits_.set(v);
  ++count_;
  for (int x : poset_->up_ids(v)) ++cnt_down_[x];
  for (int x : poset_->down_ids(v)) ++cnt_up_[x];
}

void IncrementalFamily::remove(int v) {
  bits_.reset(v);
  --count_;
  for (int x : poset_->up_ids(v)) --cnt_down_[x];
  for (int x : poset_->down_ids(v)) --cnt_up_[x];
}

Family IncrementalFamily::to_family() const {
  Family f(*poset_);
  bits_.for_each([&](int id) { f.add(id); });
  return f;
}

bool IncrementalFamily::can_add_one(int v, const PatternSpec& p) const {
  const int c_up = cnt_up_[v], c_dn = cnt_down_[v];
  switch (p.kind) {
    case PatternKind::Broom:
    case PatternKind::Wedge: {
      const int u = p.kind == PatternKind::Wedge ? 2 : p.param;
      if (c_dn >= u) return false;  // v as handle
      for (int x : poset_->up_ids(v))  // v as a new leaf under x
        if (bits_.test(x) && cnt_down_[x] >= u - 1) return false;
      return true;
    }
    case PatternKind::Fork:
    case PatternKind::Vee: {
      const int w = p.kind == PatternKind::Vee ? 2 : p.param;
      if (c_up >= w) return false;
      for (int x : poset_->down_ids(v))
        if (bits_.test(x) && cnt_up_[x] >= w - 1) return false;
      return true;
    }
    case PatternKind::Butterfly: {
      bool blocked = false;
      bits_.for_each([&](int x) {
        if (blocked || x == v) return;
        if (bits_.and_count2(poset_->down_set(v), poset_->down_set(x)) >= 2 ||
            bits_.and_count2(poset_->up_set(v), poset_->up_set(x)) >= 2)
          blocked = true;
      });
      return !blocked;
    }
    case PatternKind::Y: {
      if (c_dn >= 1 && c_up >= 2) return false;  // v as the branch element
      for (int x : poset_->up_ids(v))            // x gains a lower member
        if (bits_.test(x) && cnt_up_[x] >= 2) return false;
      for (int x : poset_->down_ids(v))          // x gains an upper member
        if (bits_.test(x) && cnt_up_[x] >= 1 && cnt_down_[x] >= 1) return false;
      return true;
    }
    case PatternKind::Yprime: {
      if (c_up >= 1 && c_dn >= 2) return false;
      for (int x : poset_->down_ids(v))
        if (bits_.test(x) && cnt_down_[x] >= 2) return false;
      for (int x : poset_->up_ids(v))
        if (bits_.test(x) && cnt_down_[x] >= 1 && cnt_up_[x] >= 1) return false;
      return true;
    }
    default:
      // Chain / Yk / Ykprime / Generic run the full detector on F + v.
      return true;
  }
}

bool IncrementalFamily::can_add(int v) const {
  if (bits_.test(v)) return false;
  for (const auto& p : patterns_)
    if (!can_add_one(v, p)) return false;
  if (needs_full_check_) {
    Family trial = to_family();
    trial.add(v);
    for (const auto& p : patterns_) {
      if (p.kind == PatternKind::Chain || p.kind == PatternKind::Yk ||
          p.kind == PatternKind::Ykprime || p.kind == PatternKind::Generic)
        if (contains_pattern(trial, p)) return false;
    }
  }
  return true;
}

bool IncrementalFamily::fast_plausible(int v) const {
  if (bits_.test(v)) return false;
  const int c_up = cnt_up_[v], c_dn = cnt_down_[v];
  for (const auto& p : patterns_) {
    switch (p.kind) {
      case PatternKind::Broom:
        if (c_dn >= p.param) return false;
        break;
      case PatternKind::Wedge:
        if (c_dn >= 2 || (c_dn >= 1 && c_up >= 1)) return false;
        break;
      case PatternKind::Fork:
        if (c_up >= p.param) return false;
        break;
      case PatternKind::Vee:
        if (c_up >= 2 || (c_dn >= 1 && c_up >= 1)) return false;
        break;
      case PatternKind::Y:
        if (c_dn >= 1 && c_up >= 2) return false;
        break;
      case PatternKind::Yprime:
        if (c_up >= 1 && c_dn >= 2) return false;
        break;
      case PatternKind::Chain:
        if (p.param <= 1) return false;
        if (p.param == 2 && (c_dn >= 1 || c_up >= 1)) return false;
        if (p.param == 3 && c_dn >= 1 && c_up >= 1) return false;
        break;
      default:
        break;
    }
  }
  return true;
}

}  // namespace qlat
