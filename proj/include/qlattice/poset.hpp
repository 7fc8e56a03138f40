#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlattice/bitset.hpp"
#include "qlattice/errors.hpp"
#include "qlattice/numeric.hpp"

namespace qlat {

/// Finite graded poset given by covers between consecutive levels. This is
/// the interface the normalized-matching machinery and the extremal searches
/// run against, so the linear lattice, the Boolean-lattice fixture and the
/// two-level counterexample fixtures are interchangeable.
///
/// Ids are arbitrary but fixed; every derived structure (cover lists,
/// comparability closures) is built once in finish_build(), after which the
/// poset is immutable and safe for concurrent reads.
class GradedPoset {
public:
  virtual ~GradedPoset() = default;

  int size() const { return static_cast<int>(level_of_.size()); }
  /// Highest level index; levels run 0..rank().
  int rank() const { return static_cast<int>(levels_.size()) - 1; }
  int level_of(int id) const { return level_of_[id]; }
  const std::vector<int>& level(int k) const { return levels_[k]; }
  long rank_number(int k) const { return static_cast<long>(levels_[k].size()); }

  const std::vector<int>& covers_up(int id) const { return covers_up_[id]; }
  const std::vector<int>& covers_down(int id) const { return covers_down_[id]; }

  /// Strict up-set / down-set / comparability closure, as bitsets over ids.
  const Bitset& up_set(int id) const { return up_set_[id]; }
  const Bitset& down_set(int id) const { return down_set_[id]; }
  const Bitset& comp_set(int id) const { return comp_set_[id]; }

  /// Same closures as sorted id lists (cheap to scan when sparse).
  const std::vector<int>& up_ids(int id) const { return up_ids_[id]; }
  const std::vector<int>& down_ids(int id) const { return down_ids_[id]; }

  bool less(int a, int b) const { return up_set_[a].test(b); }
  bool comparable(int a, int b) const { return a != b && comp_set_[a].test(b); }

  /// Identity token; families refuse to mix posets with different identities.
  const std::string& identity() const { return identity_; }

  /// True for posets known to have the normalized matching property; gates
  /// the LYM-based search bounds (which are only admissible under NM).
  bool normalized_matching_hint() const { return nm_hint_; }

  /// Discount factor for the two-antichain search budget:
  /// q/(q+1) for L_n(q), 1/2 for B_n, absent for posets where no such
  /// inequality has been established.
  std::optional<Rat> broom_fork_factor() const { return broom_fork_factor_; }

  /// True when the LYM-type budget of 2 for (Y,Y')-free families (sum of
  /// reciprocal rank numbers, extremes excluded) is known to hold.
  bool has_lym_type_bound() const { return lym_type_bound_; }

protected:
  GradedPoset() = default;
  GradedPoset(const GradedPoset&) = default;
  GradedPoset(GradedPoset&&) = default;
  GradedPoset& operator=(const GradedPoset&) = default;
  GradedPoset& operator=(GradedPoset&&) = default;

  /// Validates gradedness (covers only between consecutive levels) and
  /// builds every derived view.
  void finish_build(std::vector<int> level_of,
                    std::vector<std::vector<int>> covers_up,
                    std::string identity, bool nm_hint);

  std::optional<Rat> broom_fork_factor_;
  bool lym_type_bound_ = false;

private:
  std::vector<int> level_of_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<int>> covers_up_, covers_down_;
  std::vector<Bitset> up_set_, down_set_, comp_set_;
  std::vector<std::vector<int>> up_ids_, down_ids_;
  std::string identity_;
  bool nm_hint_ = false;
};

/// A graded poset handed over explicitly: used for permuted copies in tests
/// and for synthetic two-level fixtures.
class ExplicitPoset : public GradedPoset {
public:
  ExplicitPoset(std::vector<int> level_of, std::vector<std::vector<int>> covers_up,
                std::string identity, bool nm_hint) {
    finish_build(std::move(level_of), std::move(covers_up), std::move(identity),
                 nm_hint);
  }
};

/// Boolean lattice B_n: subsets of [n] ordered by inclusion. Element ids are
/// assigned levels-ascending, masks ascending within a level.
class BooleanLattice : public GradedPoset {
public:
  explicit BooleanLattice(int n);

  int n() const { return n_; }
  unsigned mask_of(int id) const { return masks_[id]; }
  int id_of(unsigned mask) const { return id_of_[mask]; }

private:
  int n_;
  std::vector<unsigned> masks_;
  std::vector<int> id_of_;
};

/// Two-level poset from explicit bipartite comparabilities: edge (i, j) puts
/// bottom element i below top element j. Ids: bottoms 0..n_bottom-1, then tops.
ExplicitPoset make_two_level(int n_bottom, int n_top,
                             const std::vector<std::pair<int, int>>& edges,
                             std::string identity, bool nm_hint);

/// The 2-regular bipartite counterexample graph (5+5 vertices) showing that
/// one side need not be a maximum (wedge, vee)-free subgraph of a regular
/// bipartite graph. It is regular, hence normalized matching.
ExplicitPoset make_pentagon_fixture();

/// Isomorphic copy of p with ids relabeled by perm (new id = perm[old id]).
ExplicitPoset make_permuted_copy(const GradedPoset& p, const std::vector<int>& perm,
                                 std::string identity);

}  // namespace qlat
