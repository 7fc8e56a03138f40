#pragma once

#include <string>
#include <vector>

#include "qlattice/family.hpp"

namespace qlat {

/// Forbidden-subposet patterns. Containment is always weak: a family contains
/// the pattern iff an injective map of pattern elements to family members
/// preserves every required strict relation; the images may have further
/// relations among themselves.
enum class PatternKind {
  Broom,      // handle above u leaves; param = u
  Fork,       // handle below v leaves; param = v
  Wedge,      // 2-broom
  Vee,        // 2-fork
  Butterfly,  // a,b < c,d
  Y,          // butterfly plus a < b
  Yprime,     // butterfly plus c < d
  Yk,         // chain c_k < ... < c_0 topped by two uppers; param = k
  Ykprime,    // dual; param = k
  Chain,      // chain with `param` members
  Generic,    // explicit strict-relation DAG
};

struct PatternSpec {
  PatternKind kind = PatternKind::Wedge;
  int param = 0;

  // Generic only: element count and strict relations (a, b) meaning a < b.
  int generic_size = 0;
  std::vector<std::pair<int, int>> generic_less;

  static PatternSpec broom(int u);
  static PatternSpec fork(int v);
  static PatternSpec wedge() { return {PatternKind::Wedge, 2, 0, {}}; }
  static PatternSpec vee() { return {PatternKind::Vee, 2, 0, {}}; }
  static PatternSpec butterfly() { return {PatternKind::Butterfly, 0, 0, {}}; }
  static PatternSpec y() { return {PatternKind::Y, 0, 0, {}}; }
  static PatternSpec yprime() { return {PatternKind::Yprime, 0, 0, {}}; }
  static PatternSpec yk(int k);
  static PatternSpec ykprime(int k);
  static PatternSpec chain(int members);
  /// Throws bad_pattern unless the relation is a strict partial order.
  static PatternSpec generic(int size, std::vector<std::pair<int, int>> less);

  /// Parses the CLI spelling: wedge, vee, broom:u, fork:v, butterfly, y,
  /// yprime, yk:k, ykprime:k, chain:len.
  static PatternSpec parse(const std::string& name);

  std::string name() const;
  /// Number of pattern elements.
  int size() const;
  /// Explicit transitively-closed DAG form of any named kind.
  PatternSpec generic_form() const;
};

/// Specialized detector per named kind; Generic dispatches to the matcher.
bool contains_pattern(const Family& f, const PatternSpec& p);

/// Backtracking subposet matcher run on the explicit DAG form. This is the
/// oracle the specialized detectors are tested against.
bool contains_pattern_generic(const Family& f, const PatternSpec& p);

/// True iff contains_pattern is false for every listed pattern.
bool free_of(const Family& f, const std::vector<PatternSpec>& patterns);

/// Number of family members (other than x) comparable to x. A family is
/// (wedge, vee)-free iff every degree is <= 1; the extremal solver branches
/// on exactly this characterization. Throws not_member if x is not in f.
int comparability_degree(const Family& f, int x);

/// Incremental feasibility tracker used by the search engine and the random
/// family generators: maintains per-element comparability counts so that
/// "can v be added while staying free?" is a neighbor-list scan for the named
/// kinds (patterns needing chain DP fall back to a full detector pass).
class IncrementalFamily {
public:
  IncrementalFamily(const GradedPoset& p, std::vector<PatternSpec> patterns);

  const GradedPoset& poset() const { return *poset_; }
  const Bitset& bits() const { return bits_; }
  int size() const { return count_; }

  /// Exact test: family + v still free of every pattern?
  bool can_add(int v) const;
  /// O(1) relaxed test: false only when v provably cannot be added. Used by
  /// the search bound; never wrongly excludes an addable element.
  bool fast_plausible(int v) const;

  void add(int v);
  void remove(int v);

  Family to_family() const;

private:
  bool can_add_one(int v, const PatternSpec& p) const;

  const GradedPoset* poset_;
  std::vector<PatternSpec> patterns_;
  bool needs_full_check_ = false;  // Chain / Yk / Ykprime / Generic present
  Bitset bits_;
  int count_ = 0;
  std::vector<int> cnt_up_, cnt_down_;  // |up(x) ∩ F|, |down(x) ∩ F| for all x
};

}  // namespace qlat
