#include "qlattice/patterns.hpp"

#include <random>

#include "doctest.h"
#include "qlattice/extremal.hpp"

using namespace qlat;

namespace {

const std::vector<PatternSpec>& named_patterns() {
  static const std::vector<PatternSpec> pats = {
      PatternSpec::wedge(),      PatternSpec::vee(),
      PatternSpec::broom(1),     PatternSpec::broom(2),
      PatternSpec::broom(3),     PatternSpec::fork(1),
      PatternSpec::fork(2),      PatternSpec::fork(3),
      PatternSpec::butterfly(),  PatternSpec::y(),
      PatternSpec::yprime(),     PatternSpec::yk(0),
      PatternSpec::yk(1),        PatternSpec::yk(2),
      PatternSpec::ykprime(0),   PatternSpec::ykprime(1),
      PatternSpec::ykprime(2),   PatternSpec::chain(2),
      PatternSpec::chain(3),     PatternSpec::chain(4),
  };
  return pats;
}

Family chain_family(const LinearLattice& l, int len) {
  // a maximal chain prefix: 0 < point < plane < ... ascending by level
  Family f(l);
  int cur = l.zero_id();
  f.add(cur);
  for (int step = 1; step < len; ++step) {
    cur = l.covers_up(cur)[0];
    f.add(cur);
  }
  return f;
}

}  // namespace

TEST_CASE("pattern parsing round-trips the CLI names") {
  for (const auto& p : named_patterns()) {
    PatternSpec q = PatternSpec::parse(p.name());
    CHECK(q.kind == p.kind);
    CHECK(q.param == p.param);
  }
  CHECK_THROWS_AS(PatternSpec::parse("owl"), bad_pattern);
  CHECK_THROWS_AS(PatternSpec::parse("broom:x"), bad_pattern);
  CHECK_THROWS_AS(PatternSpec::parse("chain:0"), bad_pattern);
}

TEST_CASE("generic patterns must be acyclic") {
  CHECK_THROWS_AS(PatternSpec::generic(2, {{0, 1}, {1, 0}}), bad_pattern);
  CHECK_THROWS_AS(PatternSpec::generic(3, {{0, 1}, {1, 2}, {2, 0}}), bad_pattern);
  PatternSpec ok = PatternSpec::generic(3, {{0, 1}, {1, 2}});
  CHECK(ok.generic_less.size() == 3);  // closure adds (0,2)
}

TEST_CASE("a full level is an antichain") {
  LinearLattice l(3, 2);
  Family lv = full_level(l, 1);
  CHECK_FALSE(contains_pattern(lv, PatternSpec::wedge()));
  CHECK_FALSE(contains_pattern(lv, PatternSpec::vee()));
  CHECK_FALSE(contains_pattern(lv, PatternSpec::chain(2)));
}

TEST_CASE("a 4-element chain contains a 3-broom and a 3-fork") {
  LinearLattice l(3, 2);
  Family c = chain_family(l, 4);
  CHECK(contains_pattern(c, PatternSpec::broom(3)));
  CHECK(contains_pattern(c, PatternSpec::fork(3)));
  CHECK(contains_pattern_generic(c, PatternSpec::broom(3)));
}

TEST_CASE("two consecutive levels are butterfly-free") {
  LinearLattice l(4, 2);
  for (int k = 0; k < 4; ++k) {
    Family f = full_levels(l, k, k + 1);
    CHECK_FALSE(contains_pattern(f, PatternSpec::butterfly()));
  }
}

TEST_CASE("Fano configurations are (wedge, vee)-free and maximal") {
  LinearLattice l(3, 2);
  auto configs = fano_configurations(l);
  REQUIRE(!configs.empty());
  const std::vector<PatternSpec> wv = {PatternSpec::wedge(), PatternSpec::vee()};
  const Family& left = configs.front();
  CHECK(free_of(left, wv));
  // adding any of the remaining proper subspaces breaks freeness
  for (int id = 0; id < l.size(); ++id) {
    if (left.member(id) || id == l.zero_id() || id == l.full_id()) continue;
    Family extended = left;
    extended.add(id);
    CHECK_FALSE(free_of(extended, wv));
  }
}

TEST_CASE("empty family is free of everything") {
  LinearLattice l(3, 2);
  Family empty(l);
  CHECK(free_of(empty, named_patterns()));
}

TEST_CASE("comparability degree") {
  LinearLattice l(3, 3);
  Family single(l);
  single.add(l.level(1)[0]);
  CHECK(comparability_degree(single, l.level(1)[0]) == 0);
  CHECK_THROWS_AS(comparability_degree(single, l.level(1)[1]), not_member);

  Family c = chain_family(l, 3);
  int middle = -1;
  for (int id : c.members())
    if (l.level_of(id) == 1) middle = id;
  CHECK(comparability_degree(c, middle) == 2);
}

TEST_CASE("degree <= 1 characterizes (wedge, vee)-free families") {
  LinearLattice l(3, 3);
  const std::vector<PatternSpec> wv = {PatternSpec::wedge(), PatternSpec::vee()};
  for (int trial = 0; trial < 1000; ++trial) {
    Family f = random_family(l, 900 + trial, 0.05 + 0.02 * (trial % 20));
    int max_deg = 0;
    for (int x : f.members())
      max_deg = std::max(max_deg, comparability_degree(f, x));
    CHECK((max_deg <= 1) == free_of(f, wv));
  }
}

TEST_CASE("specialized detectors agree with the generic matcher") {
  LinearLattice l(4, 2);
  for (int trial = 0; trial < 500; ++trial) {
    Family f = random_family(l, 4242 + trial, 0.04 + 0.03 * (trial % 10));
    for (const auto& p : named_patterns())
      CHECK(contains_pattern(f, p) == contains_pattern_generic(f, p));
  }
}

TEST_CASE("monotonicity under supersets") {
  LinearLattice l(3, 3);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    Family f = random_family(l, 5000 + trial, 0.25);
    Family g = f;
    for (int extra = 0; extra < 4; ++extra) g.add(static_cast<int>(rng() % l.size()));
    for (const auto& p : named_patterns())
      if (contains_pattern(f, p)) CHECK(contains_pattern(g, p));
  }
}

TEST_CASE("duality swaps brooms and forks (exhaustive, small families)") {
  LinearLattice l(3, 2);
  // all families of size <= 3 plus sampled size-6 families
  std::vector<std::vector<int>> families;
  for (int a = 0; a < l.size(); ++a)
    for (int b = a; b < l.size(); ++b)
      for (int c = b; c < l.size(); ++c) families.push_back({a, b, c});
  std::mt19937_64 rng(13);
  for (int t = 0; t < 400; ++t) {
    std::vector<int> ids;
    while (ids.size() < 6) ids.push_back(static_cast<int>(rng() % l.size()));
    families.push_back(ids);
  }
  for (const auto& ids : families) {
    Family f(l, ids);
    Family d(l);
    for (int id : f.members()) d.add(l.dual_id(id));
    for (int u = 1; u <= 3; ++u) {
      CHECK(contains_pattern(f, PatternSpec::broom(u)) ==
            contains_pattern(d, PatternSpec::fork(u)));
      CHECK(contains_pattern(f, PatternSpec::fork(u)) ==
            contains_pattern(d, PatternSpec::broom(u)));
    }
    CHECK(contains_pattern(f, PatternSpec::y()) ==
          contains_pattern(d, PatternSpec::yprime()));
  }
}

TEST_CASE("chains witness Y_k and Y'_k") {
  // Y_k has k+3 elements, so a chain needs k+3 members to contain it
  LinearLattice l(4, 2);
  for (int k = 0; k <= 1; ++k) {
    Family c = chain_family(l, k + 3);
    CHECK(contains_pattern(c, PatternSpec::yk(k)));
    CHECK(contains_pattern(c, PatternSpec::ykprime(k)));
    CHECK(contains_pattern_generic(c, PatternSpec::yk(k)));
    CHECK(contains_pattern(c, PatternSpec::chain(k + 3)));
    Family shorter = chain_family(l, k + 2);
    CHECK_FALSE(contains_pattern(shorter, PatternSpec::yk(k)));
    CHECK_FALSE(contains_pattern_generic(shorter, PatternSpec::yk(k)));
  }
}

TEST_CASE("incremental feasibility matches the detectors") {
  LinearLattice l(4, 2);
  std::vector<std::vector<PatternSpec>> sets = {
      {PatternSpec::wedge(), PatternSpec::vee()},
      {PatternSpec::butterfly()},
      {PatternSpec::y(), PatternSpec::yprime()},
      {PatternSpec::broom(3), PatternSpec::fork(2)},
      {PatternSpec::chain(3)},
  };
  std::mt19937_64 rng(99);
  for (const auto& pats : sets) {
    for (int trial = 0; trial < 60; ++trial) {
      IncrementalFamily inc(l, pats);
      for (int step = 0; step < 40; ++step) {
        int v = static_cast<int>(rng() % l.size());
        Family now = inc.to_family();
        bool expect;
        if (now.member(v)) {
          expect = false;
        } else {
          Family trialf = now;
          trialf.add(v);
          expect = free_of(trialf, pats);
        }
        CHECK(inc.can_add(v) == expect);
        if (expect && !inc.fast_plausible(v)) CHECK(false);  // relaxed never lies
        if (expect && (rng() & 1)) inc.add(v);
      }
      // removal keeps counters consistent
      auto mem = inc.to_family().members();
      for (int id : mem)
        if (rng() & 1) inc.remove(id);
      Family left = inc.to_family();
      CHECK(free_of(left, pats));
    }
  }
}
