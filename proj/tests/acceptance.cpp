// Acceptance suite: one criterion per section, each printing a single
// PASS/FAIL line. Run with a criterion number (1..14) or "all".
//
// Every expected value here is pinned exactly; no tolerance is deferred.

#include <algorithm>
#include <bit>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qlattice/extremal.hpp"
#include "qlattice/gaussian.hpp"
#include "qlattice/normalize.hpp"
#include "qlattice/patterns.hpp"

using namespace qlat;

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [violated: " << what << "]";
    }
  }
  template <class T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
      ok = false;
      detail << " [" << what << ": got " << got << ", want " << want << "]";
    }
  }
};

const std::vector<PatternSpec>& wedge_vee() {
  static const std::vector<PatternSpec> wv = {PatternSpec::wedge(),
                                              PatternSpec::vee()};
  return wv;
}

const std::vector<PatternSpec>& y_pair() {
  static const std::vector<PatternSpec> yy = {PatternSpec::y(),
                                              PatternSpec::yprime()};
  return yy;
}

std::vector<std::vector<int>> as_sorted_sets(std::vector<std::vector<int>> v) {
  for (auto& s : v) std::sort(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------------------
// 1. Rank numbers: enumerate_level counts equal the Gaussian coefficients.
bool criterion1(Checker& c) {
  auto grid = [&](int n_max, std::vector<int> qs) {
    for (int q : qs)
      for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
          Int count(static_cast<long>(enumerate_level(n, q, k).size()));
          c.expect(count == gaussian(n, k, q),
                   "count(" + std::to_string(n) + "," + std::to_string(k) + "," +
                       std::to_string(q) + ")");
        }
  };
  grid(5, {2});
  grid(4, {3});
  grid(3, {4, 5});

  LinearLattice l42(4, 2);
  std::vector<long> ranks;
  for (int k = 0; k <= 4; ++k) ranks.push_back(l42.rank_number(k));
  c.expect(ranks == std::vector<long>({1, 15, 35, 15, 1}), "L_4(2) rank numbers");
  c.detail << " L_4(2)=1,15,35,15,1";
  return c.ok;
}

// ---------------------------------------------------------------------------
// 2. ex(L_3(2); wedge, vee) = 7 and ex(L_3(3); wedge, vee) = 13.
bool criterion2(Checker& c) {
  for (auto [q, want] : std::vector<std::pair<int, int>>{{2, 7}, {3, 13}}) {
    LinearLattice l(3, q);
    for (bool proper : {true, false}) {
      SearchProblem prob(l, wedge_vee());
      prob.proper = proper;
      Certificate cert = exact_max(prob);
      c.expect(cert.exhaustive, "exhaustive q=" + std::to_string(q));
      c.expect_eq(cert.optimum, static_cast<long long>(want),
                  "optimum q=" + std::to_string(q) +
                      (proper ? " (proper)" : " (full)"));
    }
    c.detail << " ex(L_3(" << q << "))=" << want;
  }
  return c.ok;
}

// ---------------------------------------------------------------------------
// 3. The optimum families of L_3(2) match the brute-force oracle and the
//    explicit Fano construction.
bool criterion3(Checker& c) {
  LinearLattice l(3, 2);
  SearchProblem prob(l, wedge_vee());
  prob.proper = true;
  Certificate cert = enumerate_optima(prob);
  c.expect(cert.exhaustive, "exhaustive");
  c.expect_eq(cert.optimum, 7LL, "optimum");

  // oracle: all C(14,7) = 3432 subsets, filtered by the generic matcher only
  std::vector<int> proper;
  for (int id = 0; id < l.size(); ++id)
    if (id != l.zero_id() && id != l.full_id()) proper.push_back(id);
  std::vector<std::vector<int>> oracle;
  std::vector<int> pick(7);
  long subsets = 0;
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == 7) {
      ++subsets;
      Family f(l, pick);
      if (!contains_pattern_generic(f, PatternSpec::wedge()) &&
          !contains_pattern_generic(f, PatternSpec::vee()))
        oracle.push_back(pick);
      return;
    }
    for (int i = start; i < static_cast<int>(proper.size()); ++i) {
      pick[depth] = proper[i];
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  c.expect_eq(subsets, 3432L, "subsets scanned");

  std::vector<std::vector<int>> constructed = {l.level(1), l.level(2)};
  for (const auto& f : fano_configurations(l)) constructed.push_back(f.members());

  bool eq_oracle = as_sorted_sets(oracle) == as_sorted_sets(cert.witnesses);
  bool eq_construction =
      as_sorted_sets(constructed) == as_sorted_sets(cert.witnesses);
  c.expect(eq_oracle, "search equals oracle");
  c.expect(eq_construction, "search equals levels + fano configurations");
  c.detail << " optima=" << cert.witnesses.size();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 4. ex-optimum families of L_3(3): exactly the two middle levels.
bool criterion4(Checker& c) {
  LinearLattice l(3, 3);
  SearchProblem prob(l, wedge_vee());
  prob.proper = true;
  Certificate cert = enumerate_optima(prob);
  c.expect(cert.exhaustive, "exhaustive");
  c.expect_eq(cert.optimum, 13LL, "optimum");
  c.expect(as_sorted_sets(cert.witnesses) ==
               as_sorted_sets({l.level(1), l.level(2)}),
           "optima are exactly the two middle levels");
  c.detail << " optima=" << cert.witnesses.size();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 5. Theorems A(1)/B at (4,2,2,2): value 35, unique optimum = level 2.
//    A budget failure is a criterion failure.
bool criterion5(Checker& c) {
  LinearLattice l(4, 2);
  SearchProblem prob(l, {PatternSpec::broom(2), PatternSpec::fork(2)});
  prob.proper = true;
  Certificate cert = enumerate_optima(prob);
  c.expect(cert.exhaustive, "exhaustive (budget failure is a test failure)");
  c.expect_eq(cert.optimum, 35LL, "optimum");
  c.expect(as_sorted_sets(cert.witnesses) == as_sorted_sets({l.level(2)}),
           "unique optimum is the middle level");

  SearchProblem awv(l, wedge_vee());
  awv.proper = true;
  Certificate a_cert = exact_max(awv);
  c.expect(a_cert.exhaustive, "wedge/vee pass exhaustive");
  c.expect_eq(a_cert.optimum, 35LL, "wedge/vee optimum");
  c.detail << " nodes=" << cert.nodes;
  return c.ok;
}

// ---------------------------------------------------------------------------
// 6. Theorem C at (3,2): both pattern sets give 14 with identical optima,
//    equal to the union of the middle levels.
bool criterion6(Checker& c) {
  LinearLattice l(3, 2);
  SearchProblem pb(l, {PatternSpec::butterfly()});
  pb.proper = true;
  SearchProblem py(l, y_pair());
  py.proper = true;
  Certificate cb = enumerate_optima(pb);
  Certificate cy = enumerate_optima(py);
  c.expect(cb.exhaustive && cy.exhaustive, "exhaustive");
  c.expect_eq(cb.optimum, 14LL, "butterfly optimum");
  c.expect_eq(cy.optimum, 14LL, "yy' optimum");
  c.expect(as_sorted_sets(cb.witnesses) == as_sorted_sets(cy.witnesses),
           "optima sets identical");
  std::vector<int> both = l.level(1);
  both.insert(both.end(), l.level(2).begin(), l.level(2).end());
  c.expect(as_sorted_sets(cb.witnesses) == as_sorted_sets({both}),
           "unique optimum is levels 1 and 2");
  return c.ok;
}

// ---------------------------------------------------------------------------
// 7. Theorem C at (4,2): both pattern sets give 50 = 35 + 15, exactly two
//    optima (levels {2,3} and {1,2}); K_delta independently returns 50.
bool criterion7(Checker& c) {
  LinearLattice l(4, 2);
  SearchProblem pb(l, {PatternSpec::butterfly()});
  pb.proper = true;
  SearchProblem py(l, y_pair());
  py.proper = true;
  Certificate cb = enumerate_optima(pb);
  Certificate cy = enumerate_optima(py);
  c.expect(cb.exhaustive && cy.exhaustive, "exhaustive");
  c.expect_eq(cb.optimum, 50LL, "butterfly optimum");
  c.expect_eq(cy.optimum, 50LL, "yy' optimum");
  c.expect(as_sorted_sets(cb.witnesses) == as_sorted_sets(cy.witnesses),
           "optima sets identical");

  auto two_levels = [&](int a, int b) {
    std::vector<int> ids = l.level(a);
    ids.insert(ids.end(), l.level(b).begin(), l.level(b).end());
    return ids;
  };
  c.expect(as_sorted_sets(cb.witnesses) ==
               as_sorted_sets({two_levels(2, 3), two_levels(1, 2)}),
           "optima are levels {2,3} and {1,2}");

  // independent smallest-weights route
  std::vector<Rat> weights;
  for (int id = 0; id < l.size(); ++id) {
    int d = l.level_of(id);
    if (d == 0 || d == 4) continue;
    weights.push_back(make_rat(Int(1), gaussian(4, d, 2)));
  }
  c.expect_eq(k_delta(weights, Rat(2)), 50L, "K_delta");
  c.detail << " nodes=" << cb.nodes + cy.nodes;
  return c.ok;
}

// ---------------------------------------------------------------------------
// 8. Normalization property suite: seeded random (wedge, vee)-free families,
//    1000 in L_4(2) and 200 in L_5(2); normalize_to_middle preserves size and
//    freeness and lands inside the push window.
bool criterion8(Checker& c) {
  long violations = 0;
  {
    LinearLattice l(4, 2);
    for (int t = 0; t < 1000; ++t) {
      Family q = random_free_family(l, wedge_vee(), 810000 + t);
      Family out = normalize_to_middle(l, q, 2, 2);
      bool ok = out.size() == q.size() && free_of(out, wedge_vee()) &&
                (out.empty() || (out.min_level() == 2 && out.max_level() == 2));
      if (!ok) ++violations;
    }
  }
  {
    LinearLattice l(5, 2);
    for (int t = 0; t < 200; ++t) {
      Family q = random_free_family(l, wedge_vee(), 850000 + t);
      Family out = normalize_to_middle(l, q, 2, 2);
      bool ok = out.size() == q.size() && free_of(out, wedge_vee()) &&
                (out.empty() || (out.min_level() >= 2 && out.max_level() <= 3));
      if (!ok) ++violations;
    }
  }
  c.expect_eq(violations, 0L, "violations");
  c.detail << " trials=1200";
  return c.ok;
}

// ---------------------------------------------------------------------------
// 9. Normalized matching, exhaustively: every subset of every level of
//    L_3(2), L_3(3), and B_4.
bool criterion9(Checker& c) {
  long checked = 0;
  auto sweep = [&](const GradedPoset& p, const std::string& name) {
    for (int i = 1; i <= p.rank(); ++i) {
      const auto& lv = p.level(i);
      const int m = static_cast<int>(lv.size());
      for (long mask = 0; mask < (1L << m); ++mask) {
        Bitset a(p.size());
        for (int t = 0; t < m; ++t)
          if (mask >> t & 1) a.set(lv[t]);
        ++checked;
        if (!check_normalized_matching(p, i, a)) {
          c.expect(false, name + " level " + std::to_string(i) + " mask " +
                              std::to_string(mask));
          return;
        }
      }
    }
  };
  LinearLattice l32(3, 2), l33(3, 3);
  BooleanLattice b4(4);
  sweep(l32, "L_3(2)");
  sweep(l33, "L_3(3)");
  sweep(b4, "B_4");
  c.detail << " subsets=" << checked;
  return c.ok;
}

// ---------------------------------------------------------------------------
// 10. LYM-type suite: seeded random (Y, Y')-free families stay within the
//     LYM-type budget of 2; the size-50 optima have sum exactly 2 with every
//     member maximal or minimal.
bool criterion10(Checker& c) {
  LinearLattice l(4, 2);
  long violations = 0;
  for (int t = 0; t < 1000; ++t) {
    Family f = random_free_family(l, y_pair(), 1010000 + t, /*proper=*/true);
    auto rep = lym_type_check(l, f);
    if (!rep.holds) ++violations;
  }
  c.expect_eq(violations, 0L, "lym-type violations");

  SearchProblem py(l, y_pair());
  py.proper = true;
  Certificate cy = enumerate_optima(py);
  c.expect_eq(static_cast<long>(cy.witnesses.size()), 2L, "two optima");
  for (const auto& w : cy.witnesses) {
    Family f(l, w);
    auto rep = lym_type_check(l, f);
    c.expect(rep.sum == Rat(2), "optimum sum exactly 2");
    c.expect(rep.equality_structure, "every member maximal or minimal");
  }
  return c.ok;
}

// ---------------------------------------------------------------------------
// 11. Boolean fixtures: Katona-Tarjan values at B_4 and B_5, and the
//     exhaustive B_4 butterfly oracle with its three optimum classes.
bool criterion11(Checker& c) {
  BooleanLattice b4(4);
  BooleanLattice b5(5);
  Certificate kt4 = exact_max(SearchProblem(b4, wedge_vee()));
  Certificate kt5 = exact_max(SearchProblem(b5, wedge_vee()));
  c.expect(kt4.exhaustive && kt5.exhaustive, "exhaustive");
  c.expect_eq(kt4.optimum, 6LL, "B_4 wedge/vee optimum");
  c.expect_eq(kt5.optimum, 12LL, "B_5 wedge/vee optimum");

  // oracle: all 2^16 families of B_4, butterfly-free maxima
  PatternSpec butterfly = PatternSpec::butterfly();
  int best = 0;
  std::vector<std::vector<int>> maxima;
  for (long mask = 0; mask < (1L << 16); ++mask) {
    int sz = std::popcount(static_cast<unsigned long>(mask));
    if (sz < best) continue;
    Family f(b4);
    for (int t = 0; t < 16; ++t)
      if (mask >> t & 1) f.add(t);
    if (contains_pattern(f, butterfly)) continue;
    if (sz > best) {
      best = sz;
      maxima.clear();
    }
    maxima.push_back(f.members());
  }
  c.expect_eq(best, 10, "B_4 butterfly optimum");

  // the three structural classes of the Boolean butterfly theorem
  auto levels_union = [&](int a, int bb) {
    std::vector<int> ids = b4.level(a);
    ids.insert(ids.end(), b4.level(bb).begin(), b4.level(bb).end());
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  std::vector<int> cls23 = levels_union(2, 3), cls12 = levels_union(1, 2);
  // reference third-class family: C([4],2) plus {1},{2,3,4},{2},{1,3,4}
  std::vector<unsigned> ref_masks = {0b0001, 0b1110, 0b0010, 0b1101};
  std::set<unsigned> ref_family;
  for (int id : b4.level(2)) ref_family.insert(b4.mask_of(id));
  for (unsigned m : ref_masks) ref_family.insert(m);

  auto isomorphic_to_ref = [&](const std::vector<int>& ids) {
    std::vector<unsigned> fam;
    for (int id : ids) fam.push_back(b4.mask_of(id));
    std::vector<int> perm = {0, 1, 2, 3};
    do {
      std::set<unsigned> mapped;
      for (unsigned m : fam) {
        unsigned mm = 0;
        for (int b = 0; b < 4; ++b)
          if (m >> b & 1) mm |= 1u << perm[b];
        mapped.insert(mm);
      }
      if (mapped == ref_family) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };

  int count23 = 0, count12 = 0, count_third = 0, other = 0;
  for (const auto& w : maxima) {
    std::vector<int> s = w;
    std::sort(s.begin(), s.end());
    if (s == cls23)
      ++count23;
    else if (s == cls12)
      ++count12;
    else if (isomorphic_to_ref(w))
      ++count_third;
    else
      ++other;
  }
  c.expect(count23 == 1 && count12 == 1, "both two-level classes present");
  c.expect(count_third > 0, "third class present");
  c.expect_eq(other, 0, "families outside the three classes");
  c.detail << " third-class-count=" << count_third
           << " total-optima=" << maxima.size();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 12. Structural identities: duality on L_4(2), maximal chains of L_3(2),
//     and the double-counting identity in L_5(2).
bool criterion12(Checker& c) {
  LinearLattice l42(4, 2);
  for (int id = 0; id < l42.size(); ++id) {
    if (l42.dual_id(l42.dual_id(id)) != id) {
      c.expect(false, "involution at id " + std::to_string(id));
      break;
    }
  }
  bool reversing = true;
  for (int u = 0; u < l42.size() && reversing; ++u)
    for (int w = 0; w < l42.size(); ++w)
      if (l42.contains_ids(u, w) !=
          l42.contains_ids(l42.dual_id(w), l42.dual_id(u))) {
        reversing = false;
        break;
      }
  c.expect(reversing, "order reversal");

  LinearLattice l32(3, 2);
  long dfs_count = 0;
  auto walk = [&](auto&& self, int v) -> void {
    if (v == l32.full_id()) {
      ++dfs_count;
      return;
    }
    for (int w : l32.covers_up(v)) self(self, w);
  };
  walk(walk, l32.zero_id());
  c.expect_eq(dfs_count, 21L, "DFS maximal chains in L_3(2)");
  c.expect(Int(dfs_count) == q_factorial(3, 2), "equals [3]_2!");
  c.expect(count_maximal_chains(l32) == 21, "DP count");

  LinearLattice l52(5, 2);
  long ok_count = 0;
  for (int t = 0; t < 100; ++t) {
    Family f = random_family(l52, 1212000 + t, 0.35);
    Family mid(l52);
    for (int id : f.members()) {
      int d = l52.level_of(id);
      if (d == 2 || d == 3) mid.add(id);
    }
    if (double_count_check(l52, mid).identity_holds) ++ok_count;
  }
  c.expect_eq(ok_count, 100L, "double-count identities");
  return c.ok;
}

// ---------------------------------------------------------------------------
// 13. Detector equivalence: 10,000 seeded random families across L_3(2),
//     L_3(3), L_4(2); every named pattern agrees with the generic matcher.
bool criterion13(Checker& c) {
  LinearLattice l32(3, 2), l33(3, 3), l42(4, 2);
  const GradedPoset* posets[3] = {&l32, &l33, &l42};
  std::vector<PatternSpec> pats = {
      PatternSpec::wedge(),     PatternSpec::vee(),
      PatternSpec::broom(1),    PatternSpec::broom(2),
      PatternSpec::broom(3),    PatternSpec::fork(1),
      PatternSpec::fork(2),     PatternSpec::fork(3),
      PatternSpec::butterfly(), PatternSpec::y(),
      PatternSpec::yprime(),    PatternSpec::yk(0),
      PatternSpec::yk(1),       PatternSpec::yk(2),
      PatternSpec::ykprime(0),  PatternSpec::ykprime(1),
      PatternSpec::ykprime(2),  PatternSpec::chain(2),
      PatternSpec::chain(3),    PatternSpec::chain(4),
  };
  long disagreements = 0, trials = 10000;
  for (long t = 0; t < trials; ++t) {
    const GradedPoset& p = *posets[t % 3];
    double density = 0.03 + 0.025 * static_cast<double>(t % 17);
    Family f = random_family(p, 1313000 + t, density);
    for (const auto& pat : pats)
      if (contains_pattern(f, pat) != contains_pattern_generic(f, pat))
        ++disagreements;
  }
  c.expect_eq(disagreements, 0L, "disagreements");
  c.detail << " trials=" << trials << " patterns=" << pats.size();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 14. Conjecture instance (3,2,2): exhaustive computation of both sides,
//     reported as found; nothing asserted about equality.
bool criterion14(Checker& c) {
  auto rep = conjecture_check(3, 2, 2);
  c.expect(rep.exhaustive, "both searches exhaustive");
  c.detail << " ex(Y_2,Y'_2)=" << rep.yk_side.optimum
           << " ex(P_3)=" << rep.chain_side.optimum
           << " equal=" << (rep.equal ? "yes" : "no");
  return c.ok;
}

struct Entry {
  int id;
  const char* title;
  bool (*fn)(Checker&);
};

const Entry kCriteria[] = {
    {1, "rank-number reproduction", criterion1},
    {2, "wedge/vee values at L_3(2), L_3(3)", criterion2},
    {3, "wedge/vee optima at L_3(2) vs oracle and construction", criterion3},
    {4, "wedge/vee optima at L_3(3)", criterion4},
    {5, "broom/fork uniqueness at (4,2,2,2)", criterion5},
    {6, "butterfly and (Y,Y') at (3,2)", criterion6},
    {7, "butterfly and (Y,Y') at (4,2) with K_delta", criterion7},
    {8, "normalize-to-middle property suite", criterion8},
    {9, "normalized matching exhaustive", criterion9},
    {10, "LYM-type suite and equality structure", criterion10},
    {11, "Boolean fixture cross-checks", criterion11},
    {12, "structural identities", criterion12},
    {13, "detector equivalence sweep", criterion13},
    {14, "conjecture instance (3,2,2)", criterion14},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1 && std::string(argv[1]) != "all") only = std::atoi(argv[1]);

  int failures = 0;
  for (const auto& e : kCriteria) {
    if (only && e.id != only) continue;
    Checker c;
    auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = e.fn(c);
    } catch (const std::exception& ex) {
      c.detail << " [exception: " << ex.what() << "]";
    }
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
            .count();
    std::cout << "CRITERION " << e.id << " " << (ok ? "PASS" : "FAIL") << " - "
              << e.title << c.detail.str() << " (" << ms << " ms)" << std::endl;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
