#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qlattice/family.hpp"
#include "qlattice/numeric.hpp"

namespace qlat {

/// Graham-Harper normalized matching condition for one subset A of level i:
/// |shadow(A)| / r_{i-1} >= |A| / r_i, compared exactly.
bool check_normalized_matching(const GradedPoset& p, int i, const Bitset& a);

/// LYM weight of a family: sum over members of 1 / (rank number of its level).
Rat lym_sum(const Family& f);

/// Outcome of one push step. For matched pushes the matching lists
/// (replaced element, replacement) pairs; for the shadow push it is empty.
struct PushReport {
  Family input, output;
  int level = 0;       // the replaced level i
  int replaced = 0;    // |B|
  Rat alpha;           // r_{i-1}/r_i - u (push down) or r_{i+1}/r_i - v (push up)
  bool bound_applicable = false;  // input was broom/fork free and alpha >= 0
  bool size_bound_ok = true;      // |out| >= |in| + alpha |B| when applicable
  std::vector<std::pair<int, int>> matching;
};

/// Replace the level-i members B of Q by their full shadow:
/// Q' = (Q - B) ∪ shadow(B). If Q was u-broom free and r_{i-1}/r_i = u + alpha
/// with alpha >= 0, then |Q'| >= |Q| + alpha |B| (verified and reported).
PushReport push_top_to_shadow(const Family& q, int i, int u);

/// Replace every level-i member by a distinct matched element of
/// shadow(B) - Q covered by it (Hall's condition is guaranteed when the
/// hypotheses hold; a matching shortfall signals a bug and throws
/// matching_failure). Preconditions: Q confined to levels <= i, Q free of
/// u-broom and v-fork, and r_{i-1}/r_i >= u (exact rational comparison,
/// else precondition_ratio). The output is re-verified to be free.
PushReport pushdown_matched(const Family& q, int i, int u, int v);
/// Dual: members of level i move to matched elements of shade(B) - Q.
PushReport pushup_matched(const Family& q, int i, int u, int v);

/// Iterated matched pushes confining a u-broom and v-fork free family to the
/// middle dimension window, with the window bounds decided by exact integer
/// power comparisons (q^{2i-n-1} >= u and q^{n-2i-1} >= v), never by
/// floating-point logarithms. Size and freeness are preserved.
Family normalize_to_middle(const LinearLattice& l, const Family& q, int u, int v);

/// Maximum-cardinality bipartite matching; adj[i] lists right neighbors of
/// left i. Deterministic: augmenting paths are explored in ascending order.
std::vector<std::pair<int, int>> max_bipartite_matching(
    int n_left, int n_right, const std::vector<std::vector<int>>& adj);

struct TwoAntichainReport {
  Rat lhs;
  bool holds = false;  // lhs <= 1
};

/// The two-antichain inequality for disjoint antichains M, A in L_n(q) minus
/// the extremes, where f maps each member of A to its unique comparable
/// member of M and all comparabilities point the same way:
///   sum_M 1/gauss(n, dim M) + q/(q+1) * sum_A 1/gauss(n, dim A) <= 1.
/// Structure violations throw bad_structure.
TwoAntichainReport two_antichain_inequality(
    const LinearLattice& l, const Family& m, const Family& a,
    const std::vector<std::pair<int, int>>& f);

struct LymTypeReport {
  Rat sum;
  bool holds = false;               // sum <= 2
  bool equality_structure = true;   // if sum == 2: every member max or min in F
};

/// LYM-type check for a (Y, Y')-free family inside L_n(q) minus the extremes.
/// Violated preconditions throw not_y_free.
LymTypeReport lym_type_check(const LinearLattice& l, const Family& f);

/// Largest count of smallest elements of S whose sum is <= delta.
long k_delta(std::vector<Rat> s, const Rat& delta);

struct ChainPartition {
  std::vector<std::vector<int>> chains;  // singletons and comparable pairs
  int width = 0;                         // |P| - max matching
};

/// Dilworth partition of a two-level poset into width-many chains (König).
/// An optional comparable pair may be pinned as one of the chains; throws
/// matching_failure if pinning cannot reach the optimal chain count.
ChainPartition dilworth_two_level_partition(
    const GradedPoset& p,
    std::optional<std::pair<int, int>> pin = std::nullopt);

/// Connectivity of the comparability bipartite graph of a two-level poset.
bool hasse_connected(const GradedPoset& p);

/// Two-level poset formed by levels k_lo < k_hi of a poset, with an edge for
/// every comparable pair across the levels. Second member maps view ids back
/// to source ids.
std::pair<ExplicitPoset, std::vector<int>> two_level_view(const GradedPoset& p,
                                                          int k_lo, int k_hi);

}  // namespace qlat
