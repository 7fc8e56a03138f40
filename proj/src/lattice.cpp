#include "qlattice/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qlat {

namespace {

// Is every row of sub in the row space of sup? sup must be in RREF.
bool span_contains(const FieldSpec& f, const GfMatrix& sub, const GfMatrix& sup,
                   const std::vector<int>& sup_pivots) {
  std::vector<int> cur(sub.cols);
  for (int r = 0; r < sub.rows; ++r) {
    for (int j = 0; j < sub.cols; ++j) cur[j] = sub.at(r, j);
    for (int i = 0; i < sup.rows; ++i) {
      int c = cur[sup_pivots[i]];
      if (c == 0) continue;
      for (int j = 0; j < sub.cols; ++j) cur[j] = f.sub(cur[j], f.mul(c, sup.at(i, j)));
    }
    for (int j = 0; j < sub.cols; ++j)
      if (cur[j] != 0) return false;
  }
  return true;
}

std::vector<int> rref_pivots(const GfMatrix& m) {
  std::vector<int> piv(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    int c = 0;
    while (c < m.cols && m.at(i, c) == 0) ++c;
    piv[i] = c;
  }
  return piv;
}

}  // namespace

std::vector<GfMatrix> enumerate_level(int n, int q, int k) {
  field_make(q);  // validates q
  if (k < 0 || k > n) throw domain_error("enumerate_level: k outside [0,n]");

  std::vector<GfMatrix> out;
  if (k == 0) {
    out.emplace_back(0, n);
    return out;
  }

  // iterate pivot column sets p_0 < ... < p_{k-1}
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    // free cells: right of the row's pivot and not a pivot column
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free_cells.emplace_back(i, j);

    std::vector<int> digits(free_cells.size(), 0);
    while (true) {
      GfMatrix m(k, n);
      for (int i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
      for (std::size_t t = 0; t < free_cells.size(); ++t)
        m.at(free_cells[t].first, free_cells[t].second) =
            static_cast<std::uint8_t>(digits[t]);
      out.push_back(std::move(m));
      // odometer
      std::size_t t = 0;
      while (t < digits.size() && ++digits[t] == q) digits[t++] = 0;
      if (t == digits.size() && !digits.empty()) break;
      if (digits.empty()) break;
    }

    // next pivot combination
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }

  std::sort(out.begin(), out.end());
  return out;
}

LinearLattice::LinearLattice(int n, int q, long element_cap)
    : n_(n), q_(q), field_(field_make(q)) {
  if (n < 0) throw domain_error("LinearLattice: n < 0");

  Int total = 0;
  for (int k = 0; k <= n; ++k) total += gaussian(n, k, q);
  if (total > element_cap)
    throw too_large("L(" + std::to_string(n) + "," + std::to_string(q) + ") has " +
                    total.get_str() + " elements, above the cap of " +
                    std::to_string(element_cap));

  std::vector<std::vector<GfMatrix>> by_level(n + 1);
  std::vector<std::vector<int>> pivots_by_level(n + 1);
  level_offset_.assign(n + 2, 0);
  for (int k = 0; k <= n; ++k) {
    by_level[k] = enumerate_level(n, q, k);
    if (Int(static_cast<long>(by_level[k].size())) != gaussian(n, k, q))
      throw bad_structure("level count does not match Gaussian coefficient");
    level_offset_[k + 1] = level_offset_[k] + static_cast<int>(by_level[k].size());
  }

  const int count = level_offset_[n + 1];
  elems_.resize(count);
  std::vector<int> level_of(count);
  int id = 0;
  for (int k = 0; k <= n; ++k)
    for (auto& m : by_level[k]) {
      elems_[id] = Subspace{n, q, k, id, std::move(m)};
      level_of[id] = k;
      ++id;
    }

  // covers: U at level k is covered by W at level k+1 iff U <= W
  std::vector<std::vector<int>> covers(count);
  for (int k = 0; k < n; ++k) {
    for (int wi = level_offset_[k + 1]; wi < level_offset_[k + 2]; ++wi) {
      auto wpiv = rref_pivots(elems_[wi].rref);
      for (int ui = level_offset_[k]; ui < level_offset_[k + 1]; ++ui)
        if (span_contains(field_, elems_[ui].rref, elems_[wi].rref, wpiv))
          covers[ui].push_back(wi);
    }
  }

  finish_build(std::move(level_of), std::move(covers),
               "L(" + std::to_string(n) + "," + std::to_string(q) + ")",
               /*nm_hint=*/true);
  broom_fork_factor_ = make_rat(q, q + 1);
  lym_type_bound_ = true;
}

int LinearLattice::find_id(const GfMatrix& rref_mat) const {
  const int k = rref_mat.rows;
  if (k < 0 || k > n_ || rref_mat.cols != n_) return -1;
  auto lo = elems_.begin() + level_offset_[k];
  auto hi = elems_.begin() + level_offset_[k + 1];
  auto it = std::lower_bound(lo, hi, rref_mat, [](const Subspace& s, const GfMatrix& m) {
    return s.rref < m;
  });
  if (it == hi || !(it->rref == rref_mat)) return -1;
  return it->id;
}

int LinearLattice::id_of_span(const GfMatrix& rows) const {
  return find_id(rref(field_, rows).mat);
}

bool LinearLattice::contains_ids(int u, int w) const {
  return u == w || less(u, w);
}

int LinearLattice::sum_ids(int u, int w) const {
  const GfMatrix& a = elems_[u].rref;
  const GfMatrix& b = elems_[w].rref;
  GfMatrix stacked(a.rows + b.rows, n_);
  std::copy(a.a.begin(), a.a.end(), stacked.a.begin());
  std::copy(b.a.begin(), b.a.end(), stacked.a.begin() + a.a.size());
  int id = id_of_span(stacked);
  if (id < 0) throw bad_structure("sum not found in lattice");
  return id;
}

int LinearLattice::intersect_ids(int u, int w) const {
  // intersection through duality: one code path, validated by the involution tests
  return dual_id(sum_ids(dual_id(u), dual_id(w)));
}

int LinearLattice::dual_id(int id) const {
  int d = find_id(nullspace_basis(field_, elems_[id].rref));
  if (d < 0) throw bad_structure("dual not found in lattice");
  return d;
}

bool contains(const Subspace& u, const Subspace& w) {
  if (u.n != w.n || u.q != w.q)
    throw mismatched_ambient("contains: subspaces from different ambients");
  FieldSpec f = field_make(u.q);
  return span_contains(f, u.rref, w.rref, rref_pivots(w.rref));
}

Subspace sum(const LinearLattice& l, const Subspace& u, const Subspace& w) {
  if (u.n != l.n() || w.n != l.n() || u.q != l.q() || w.q != l.q())
    throw mismatched_ambient("sum: subspaces from different ambients");
  return l.subspace(l.sum_ids(u.id, w.id));
}

Subspace intersect(const LinearLattice& l, const Subspace& u, const Subspace& w) {
  if (u.n != l.n() || w.n != l.n() || u.q != l.q() || w.q != l.q())
    throw mismatched_ambient("intersect: subspaces from different ambients");
  return l.subspace(l.intersect_ids(u.id, w.id));
}

Subspace dual(const LinearLattice& l, const Subspace& w) {
  return l.subspace(l.dual_id(w.id));
}

IntervalMap interval(const LinearLattice& l, int u_id, int w_id) {
  if (!l.contains_ids(u_id, w_id))
    throw not_comparable("interval: U is not contained in W");
  const Subspace& U = l.subspace(u_id);
  const Subspace& W = l.subspace(w_id);
  const FieldSpec& f = l.field();
  const int d = W.dim - U.dim;

  // extend a basis of U to one of W; the extra rows give quotient coordinates
  std::vector<std::vector<int>> ext;
  {
    GfMatrix cur = U.rref;
    for (int r = 0; r < W.rref.rows && static_cast<int>(ext.size()) < d; ++r) {
      GfMatrix trial(cur.rows + 1, l.n());
      std::copy(cur.a.begin(), cur.a.end(), trial.a.begin());
      for (int j = 0; j < l.n(); ++j)
        trial.at(cur.rows, j) = W.rref.at(r, j);
      RrefResult rr = rref(f, trial);
      if (rr.rank > cur.rows) {
        std::vector<int> v(l.n());
        for (int j = 0; j < l.n(); ++j) v[j] = W.rref.at(r, j);
        ext.push_back(std::move(v));
        cur = std::move(rr.mat);
      }
    }
  }

  IntervalMap out;
  out.quotient = std::make_unique<LinearLattice>(d, l.q());
  out.to_global.assign(out.quotient->size(), -1);
  out.to_local.assign(l.size(), -1);

  for (int lid = 0; lid < out.quotient->size(); ++lid) {
    const GfMatrix& S = out.quotient->subspace(lid).rref;
    GfMatrix lift(U.rref.rows + S.rows, l.n());
    std::copy(U.rref.a.begin(), U.rref.a.end(), lift.a.begin());
    for (int r = 0; r < S.rows; ++r)
      for (int j = 0; j < l.n(); ++j) {
        int acc = 0;
        for (int t = 0; t < d; ++t)
          acc = f.add(acc, f.mul(S.at(r, t), ext[t][j]));
        lift.at(U.rref.rows + r, j) = static_cast<std::uint8_t>(acc);
      }
    int gid = l.id_of_span(lift);
    if (gid < 0) throw bad_structure("interval: lifted subspace missing");
    out.to_global[lid] = gid;
    out.to_local[gid] = lid;
  }
  return out;
}

Int count_maximal_chains(const LinearLattice& l) {
  std::vector<Int> up(l.size(), 0);
  up[l.zero_id()] = 1;
  for (int k = 0; k < l.rank(); ++k)
    for (int v : l.level(k))
      for (int w : l.covers_up(v)) up[w] += up[v];
  return up[l.full_id()];
}

Int chains_through(const LinearLattice& l, int id) {
  std::vector<Int> up(l.size(), 0), down(l.size(), 0);
  up[l.zero_id()] = 1;
  for (int k = 0; k < l.rank(); ++k)
    for (int v : l.level(k))
      for (int w : l.covers_up(v)) up[w] += up[v];
  down[l.full_id()] = 1;
  for (int k = l.rank(); k > 0; --k)
    for (int v : l.level(k))
      for (int u : l.covers_down(v)) down[u] += down[v];
  return up[id] * down[id];
}

void save_lattice(const LinearLattice& l, std::ostream& os) {
  os << "LNQ 1 " << l.n() << " " << l.q() << "\n";
  for (int k = 0; k <= l.rank(); ++k) {
    os << "LEVEL " << k << " " << l.level(k).size() << "\n";
    for (int id : l.level(k)) {
      const GfMatrix& m = l.subspace(id).rref;
      for (std::size_t t = 0; t < m.a.size(); ++t) {
        if (t) os << ' ';
        os << static_cast<int>(m.a[t]);
      }
      os << "\n";
    }
  }
}

void save_lattice_file(const LinearLattice& l, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw io_error("cannot open " + path + " for writing");
  save_lattice(l, os);
  if (!os) throw io_error("write failed: " + path);
}

LinearLattice load_lattice(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw io_error("lattice cache: empty stream");
  std::istringstream hdr(line);
  std::string magic;
  int version = 0, n = -1, q = 0;
  hdr >> magic >> version >> n >> q;
  if (magic != "LNQ" || version != 1 || n < 0)
    throw io_error("lattice cache: bad header '" + line + "'");
  FieldSpec f = field_make(q);

  // Parse all levels, verify elements are canonical RREF matrices in strictly
  // ascending order; counts are checked against the Gaussian coefficients.
  LinearLattice fresh(n, q);
  int expect_id = 0;
  for (int k = 0; k <= n; ++k) {
    if (!std::getline(is, line)) throw io_error("lattice cache: truncated");
    std::istringstream lh(line);
    std::string tag;
    int kk = -1;
    long cnt = -1;
    lh >> tag >> kk >> cnt;
    if (tag != "LEVEL" || kk != k) throw io_error("lattice cache: bad level header");
    if (Int(cnt) != gaussian(n, k, q))
      throw io_error("lattice cache: level count mismatch at level " +
                     std::to_string(k));
    for (long i = 0; i < cnt; ++i) {
      if (!std::getline(is, line)) throw io_error("lattice cache: truncated");
      GfMatrix m(k, n);
      std::istringstream es(line);
      for (std::size_t t = 0; t < m.a.size(); ++t) {
        int v;
        if (!(es >> v) || v < 0 || v >= q)
          throw io_error("lattice cache: bad entry at level " + std::to_string(k));
        m.a[t] = static_cast<std::uint8_t>(v);
      }
      int extra;
      if (es >> extra) throw io_error("lattice cache: trailing entries");
      if (!(rref(f, m).mat == m))
        throw io_error("lattice cache: element not in canonical RREF");
      if (!(fresh.subspace(expect_id).rref == m))
        throw io_error("lattice cache: element out of canonical order");
      ++expect_id;
    }
  }
  // Canonical order fully determines the lattice; the freshly built object
  // (Hasse edges recomputed) is the loaded value.
  return fresh;
}

LinearLattice load_lattice_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("cannot open " + path);
  return load_lattice(is);
}

}  // namespace qlat
