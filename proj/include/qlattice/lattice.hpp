#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "qlattice/gaussian.hpp"
#include "qlattice/gf.hpp"
#include "qlattice/poset.hpp"

namespace qlat {

/// One element of L_n(q): a subspace held as its unique RREF representative.
/// id is the index in canonical lattice order (levels ascending, row-major
/// lexicographic within a level) and is stable across runs for fixed (n, q).
struct Subspace {
  int n = 0, q = 0, dim = 0, id = -1;
  GfMatrix rref;  // dim x n, rank dim, reduced row echelon form
};

/// All canonical RREF matrices of k-dimensional subspaces of (F_q)^n, sorted
/// in canonical (lexicographic row-major) order. Generated by iterating pivot
/// column sets and free-entry assignments, so the count is the Gaussian
/// coefficient by construction.
std::vector<GfMatrix> enumerate_level(int n, int q, int k);

/// The lattice of subspaces of (F_q)^n ordered by inclusion, with Hasse
/// covers and comparability closures materialized. Immutable after build.
class LinearLattice : public GradedPoset {
public:
  static constexpr long kDefaultElementCap = 1'000'000;

  /// Enumerates all levels and computes covers. Throws too_large when the
  /// total element count exceeds the cap, unsupported_field for bad q.
  LinearLattice(int n, int q, long element_cap = kDefaultElementCap);

  int n() const { return n_; }
  int q() const { return q_; }
  const FieldSpec& field() const { return field_; }

  const Subspace& subspace(int id) const { return elems_[id]; }
  int zero_id() const { return 0; }
  int full_id() const { return size() - 1; }

  /// Id of the subspace with the given RREF representative; -1 if absent.
  int find_id(const GfMatrix& rref_mat) const;
  /// As find_id but canonicalizes arbitrary spanning rows first.
  int id_of_span(const GfMatrix& rows) const;

  /// U <= W as subspaces.
  bool contains_ids(int u, int w) const;

  int sum_ids(int u, int w) const;
  int intersect_ids(int u, int w) const;
  int dual_id(int id) const;

private:
  int n_, q_;
  FieldSpec field_;
  std::vector<Subspace> elems_;
  std::vector<int> level_offset_;  // id of first element of each level
};

/// True iff every row of u.rref lies in the row space of w.rref.
/// Throws mismatched_ambient unless both live in the same (n, q).
bool contains(const Subspace& u, const Subspace& w);

/// Smallest subspace containing both (row-space of stacked rows).
Subspace sum(const LinearLattice& l, const Subspace& u, const Subspace& w);
/// Intersection, computed through duality: (U ∩ W) = θ(θ(U) + θ(W)).
Subspace intersect(const LinearLattice& l, const Subspace& u, const Subspace& w);
/// Orthogonal-complement style dual θ(W) = nullspace(M_W); an order-reversing
/// involution that flips dimension k to n-k.
Subspace dual(const LinearLattice& l, const Subspace& w);

/// Order isomorphism between the interval [U, W] and L_{dim W - dim U}(q),
/// realized by extending a basis of U to W and reading quotient coordinates.
/// Maps are materialized in both directions.
struct IntervalMap {
  std::unique_ptr<LinearLattice> quotient;
  std::vector<int> to_global;  // quotient id -> ambient id
  std::vector<int> to_local;   // ambient id -> quotient id, -1 outside interval
};
IntervalMap interval(const LinearLattice& l, int u_id, int w_id);

/// Exact count of maximal chains, by dynamic programming over the Hasse
/// diagram (structurally independent of the [n]_q! closed form, which the
/// tests compare against).
Int count_maximal_chains(const LinearLattice& l);
/// Maximal chains passing through the given element.
Int chains_through(const LinearLattice& l, int id);

/// Versioned text cache. Format: "LNQ 1 <n> <q>", then per level k ascending
/// a header "LEVEL <k> <count>" followed by one line per subspace carrying the
/// k x n RREF entries row-major, space separated. Hasse edges are recomputed
/// on load. Output is bit-reproducible for fixed (n, q).
void save_lattice(const LinearLattice& l, std::ostream& os);
void save_lattice_file(const LinearLattice& l, const std::string& path);
/// Parses and validates a cache file, then rebuilds derived structure.
/// Level counts are checked against the Gaussian coefficients.
LinearLattice load_lattice(std::istream& is);
LinearLattice load_lattice_file(const std::string& path);

}  // namespace qlat
