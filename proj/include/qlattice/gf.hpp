#pragma once

#include <cstdint>
#include <vector>

#include "qlattice/errors.hpp"

namespace qlat {

/// Arithmetic in GF(q) for the small prime powers this toolkit supports:
/// q in {2, 3, 4, 5, 7, 8, 9}. Elements are integer codes in [0, q). For
/// extension fields GF(p^e) the code of sum(c_i alpha^i) is sum(c_i p^i),
/// where alpha is a root of the fixed modulus polynomial. All operations go
/// through q x q tables precomputed at construction, so FieldSpec values are
/// immutable and safe to share across threads.
class FieldSpec {
public:
  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }

  /// Coefficients c_0..c_e of the monic irreducible modulus (c_e = 1);
  /// empty for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const {
    if (a == 0) throw division_by_zero("GF(" + std::to_string(q_) + "): inv(0)");
    return inv_[a];
  }
  /// a / b
  int div(int a, int b) const { return mul(a, inv(b)); }

private:
  friend FieldSpec field_make(int q);
  int q_ = 0, p_ = 0, e_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

/// Build the field of order q. Throws unsupported_field for anything outside
/// the supported set. The modulus per extension field is hardcoded, so codes
/// and tables are identical across runs.
FieldSpec field_make(int q);

/// Dense row-major matrix over GF(q); entries are element codes.
struct GfMatrix {
  int rows = 0, cols = 0;
  std::vector<std::uint8_t> a;

  GfMatrix() = default;
  GfMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::uint8_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const GfMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  /// Lexicographic on (rows, row-major entries); column count assumed equal.
  bool operator<(const GfMatrix& o) const {
    if (rows != o.rows) return rows < o.rows;
    return a < o.a;
  }
};

struct RrefResult {
  GfMatrix mat;                 // zero rows dropped: exactly rank x cols
  int rank = 0;
  std::vector<int> pivot_cols;  // strictly increasing
};

/// Unique reduced row echelon form of m over the given field. The output has
/// its zero rows removed, so a k-dimensional row space yields a k x n matrix.
RrefResult rref(const FieldSpec& f, GfMatrix m);

/// RREF basis of {x : m x^T = 0}. Row count is cols(m) - rank(m).
GfMatrix nullspace_basis(const FieldSpec& f, const GfMatrix& m);

}  // namespace qlat
