#include "qlattice/family.hpp"

#include <fstream>
#include <sstream>

namespace qlat {

std::vector<int> Family::members_at_level(int k) const {
  std::vector<int> out;
  bits_.for_each([&](int id) {
    if (poset_->level_of(id) == k) out.push_back(id);
  });
  return out;
}

int Family::min_level() const {
  int lo = -1;
  bits_.for_each([&](int id) {
    int k = poset_->level_of(id);
    if (lo < 0 || k < lo) lo = k;
  });
  return lo;
}

int Family::max_level() const {
  int hi = -1;
  bits_.for_each([&](int id) {
    int k = poset_->level_of(id);
    if (k > hi) hi = k;
  });
  return hi;
}

Family full_level(const GradedPoset& p, int k) {
  if (k < 0 || k > p.rank()) throw bad_level("full_level: no such level");
  Family f(p);
  for (int id : p.level(k)) f.add(id);
  return f;
}

Family full_levels(const GradedPoset& p, int k_lo, int k_hi) {
  Family f(p);
  for (int k = k_lo; k <= k_hi; ++k)
    for (int id : p.level(k)) f.add(id);
  return f;
}

namespace {

int common_level(const Family& a, const char* where) {
  int k = -1;
  for (int id : a.members()) {
    int lk = a.poset().level_of(id);
    if (k < 0)
      k = lk;
    else if (lk != k)
      throw mixed_levels(std::string(where) + ": members on multiple levels");
  }
  return k;
}

}  // namespace

Family shadow(const Family& a) {
  int k = common_level(a, "shadow");
  if (k == 0) throw bad_level("shadow: members at level 0");
  Family out(a.poset());
  if (k < 0) return out;  // empty input
  for (int id : a.members())
    for (int d : a.poset().covers_down(id)) out.add(d);
  return out;
}

Family shade(const Family& a) {
  int k = common_level(a, "shade");
  if (k == a.poset().rank()) throw bad_level("shade: members at top level");
  Family out(a.poset());
  if (k < 0) return out;
  for (int id : a.members())
    for (int u : a.poset().covers_up(id)) out.add(u);
  return out;
}

Family shadow_of(const GradedPoset& p, int id) {
  Family a(p);
  a.add(id);
  return shadow(a);
}

Family shade_of(const GradedPoset& p, int id) {
  Family a(p);
  a.add(id);
  return shade(a);
}

void save_family(const Family& fam, const LinearLattice& l, std::ostream& os) {
  os << "FAM " << l.n() << " " << l.q() << "\n";
  for (int id : fam.members()) {
    const GfMatrix& m = l.subspace(id).rref;
    for (std::size_t t = 0; t < m.a.size(); ++t) {
      if (t) os << ' ';
      os << static_cast<int>(m.a[t]);
    }
    os << "\n";
  }
}

Family load_family(const LinearLattice& l, std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw io_error("family file: empty stream");
  std::istringstream hdr(line);
  std::string magic;
  int n = -1, q = -1;
  hdr >> magic >> n >> q;
  if (magic != "FAM") throw io_error("family file: bad header '" + line + "'");
  if (n != l.n() || q != l.q())
    throw lattice_mismatch("family file is for L(" + std::to_string(n) + "," +
                           std::to_string(q) + "), not " + l.identity());

  Family fam(l);
  while (std::getline(is, line)) {
    std::istringstream es(line);
    std::vector<int> vals;
    int v;
    while (es >> v) vals.push_back(v);
    if (!vals.empty() && vals.size() % l.n() != 0)
      throw io_error("family file: entry count not a multiple of n");
    int k = l.n() ? static_cast<int>(vals.size()) / l.n() : 0;
    GfMatrix m(k, l.n());
    for (std::size_t t = 0; t < vals.size(); ++t) {
      if (vals[t] < 0 || vals[t] >= l.q())
        throw io_error("family file: entry outside [0,q)");
      m.a[t] = static_cast<std::uint8_t>(vals[t]);
    }
    int id = l.id_of_span(m);
    if (id < 0 || l.subspace(id).dim != k)
      throw io_error("family file: line is not a rank-" + std::to_string(k) +
                     " RREF matrix");
    fam.add(id);
  }
  return fam;
}

void save_family_file(const Family& fam, const LinearLattice& l,
                      const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw io_error("cannot open " + path + " for writing");
  save_family(fam, l, os);
}

Family load_family_file(const LinearLattice& l, const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("cannot open " + path);
  return load_family(l, is);
}

}  // namespace qlat
