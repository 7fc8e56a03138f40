#pragma once

#include <iosfwd>
#include <vector>

#include "qlattice/lattice.hpp"
#include "qlattice/poset.hpp"

namespace qlat {

/// A subset of the elements of one graded poset, held as a bitset over ids.
/// Value type; all operations validate that both sides reference the same
/// poset identity.
class Family {
public:
  explicit Family(const GradedPoset& p) : poset_(&p), bits_(p.size()) {}
  Family(const GradedPoset& p, const std::vector<int>& ids) : Family(p) {
    for (int id : ids) add(id);
  }

  const GradedPoset& poset() const { return *poset_; }
  const Bitset& bits() const { return bits_; }

  void add(int id) { bits_.set(id); }
  void remove(int id) { bits_.reset(id); }
  bool member(int id) const { return bits_.test(id); }
  int size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  std::vector<int> members() const { return bits_.to_vector(); }

  bool operator==(const Family& o) const {
    return same_poset(o) && bits_ == o.bits_;
  }

  bool same_poset(const Family& o) const {
    return poset_ == o.poset_ || poset_->identity() == o.poset_->identity();
  }

  /// Ids of members lying on the given level.
  std::vector<int> members_at_level(int k) const;
  /// Smallest / largest level carrying a member; -1 when empty.
  int min_level() const;
  int max_level() const;

private:
  const GradedPoset* poset_;
  Bitset bits_;
};

inline void require_same_poset(const Family& a, const Family& b,
                               const char* where) {
  if (!a.same_poset(b))
    throw lattice_mismatch(std::string(where) + ": families from different posets");
}

/// All elements of one level as a family.
Family full_level(const GradedPoset& p, int k);
/// Union of full levels [k_lo, k_hi].
Family full_levels(const GradedPoset& p, int k_lo, int k_hi);

/// Level-(i-1) elements related to some member; all members must sit on one
/// common level i > 0 (mixed_levels / bad_level otherwise). shade is the dual.
Family shadow(const Family& a);
Family shade(const Family& a);
Family shadow_of(const GradedPoset& p, int id);
Family shade_of(const GradedPoset& p, int id);

/// Family file format (id-scheme independent): line 1 "FAM <n> <q>", then one
/// subspace per line as its row-major RREF digits. The zero subspace is an
/// empty line.
void save_family(const Family& fam, const LinearLattice& l, std::ostream& os);
Family load_family(const LinearLattice& l, std::istream& is);
void save_family_file(const Family& fam, const LinearLattice& l,
                      const std::string& path);
Family load_family_file(const LinearLattice& l, const std::string& path);

}  // namespace qlat
