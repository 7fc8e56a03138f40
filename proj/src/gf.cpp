#include "qlattice/gf.hpp"

#include <array>

namespace qlat {

namespace {

struct FieldDef {
  int q, p, e;
  std::vector<int> modulus;  // c_0..c_e ascending, monic
};

// One fixed monic irreducible modulus per supported extension field.
// GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1.
const std::array<FieldDef, 7> kFields = {{
    {2, 2, 1, {}},
    {3, 3, 1, {}},
    {4, 2, 2, {1, 1, 1}},
    {5, 5, 1, {}},
    {7, 7, 1, {}},
    {8, 2, 3, {1, 1, 0, 1}},
    {9, 3, 2, {1, 0, 1}},
}};

// Polynomial coefficient vector of the element with the given code (base-p digits).
std::vector<int> poly_of_code(int code, int p, int e) {
  std::vector<int> c(e, 0);
  for (int i = 0; i < e; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int code_of_poly(const std::vector<int>& c, int p) {
  int code = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * p + c[i];
  return code;
}

// Multiply two elements given as coefficient vectors, reduce by the modulus.
int poly_mul(const std::vector<int>& x, const std::vector<int>& y,
             const std::vector<int>& modulus, int p, int e) {
  std::vector<int> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  // reduce: replace alpha^d (d >= e) by -(c_0 + ... + c_{e-1} alpha^{e-1})
  for (int d = 2 * e - 2; d >= e; --d) {
    int coef = prod[d];
    if (coef == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < e; ++i) {
      int sub = (coef * modulus[i]) % p;
      prod[d - e + i] = ((prod[d - e + i] - sub) % p + p) % p;
    }
  }
  prod.resize(e);
  return code_of_poly(prod, p);
}

}  // namespace

FieldSpec field_make(int q) {
  const FieldDef* def = nullptr;
  for (const auto& d : kFields)
    if (d.q == q) def = &d;
  if (!def)
    throw unsupported_field("GF(" + std::to_string(q) +
                            ") not supported (q must be in {2,3,4,5,7,8,9})");

  FieldSpec f;
  f.q_ = def->q;
  f.p_ = def->p;
  f.e_ = def->e;
  f.modulus_ = def->modulus;
  f.add_.assign(static_cast<std::size_t>(q) * q, 0);
  f.mul_.assign(static_cast<std::size_t>(q) * q, 0);
  f.neg_.assign(q, 0);
  f.inv_.assign(q, 0);

  if (f.e_ == 1) {
    for (int a = 0; a < q; ++a) {
      f.neg_[a] = static_cast<std::uint8_t>((q - a) % q);
      for (int b = 0; b < q; ++b) {
        f.add_[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
        f.mul_[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
      }
    }
  } else {
    const int p = f.p_, e = f.e_;
    for (int a = 0; a < q; ++a) {
      auto pa = poly_of_code(a, p, e);
      std::vector<int> na(e);
      for (int i = 0; i < e; ++i) na[i] = (p - pa[i]) % p;
      f.neg_[a] = static_cast<std::uint8_t>(code_of_poly(na, p));
      for (int b = 0; b < q; ++b) {
        auto pb = poly_of_code(b, p, e);
        std::vector<int> s(e);
        for (int i = 0; i < e; ++i) s[i] = (pa[i] + pb[i]) % p;
        f.add_[a * q + b] = static_cast<std::uint8_t>(code_of_poly(s, p));
        f.mul_[a * q + b] =
            static_cast<std::uint8_t>(poly_mul(pa, pb, f.modulus_, p, e));
      }
    }
  }

  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<std::uint8_t>(b);

  return f;
}

RrefResult rref(const FieldSpec& f, GfMatrix m) {
  RrefResult out;
  const int rows = m.rows, cols = m.cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    // scale pivot row to leading 1
    int s = f.inv(m.at(r, c));
    for (int j = 0; j < cols; ++j)
      m.at(r, j) = static_cast<std::uint8_t>(f.mul(m.at(r, j), s));
    // eliminate the pivot column everywhere else
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      int t = m.at(i, c);
      if (t == 0) continue;
      for (int j = 0; j < cols; ++j)
        m.at(i, j) = static_cast<std::uint8_t>(
            f.sub(m.at(i, j), f.mul(t, m.at(r, j))));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = GfMatrix(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) out.mat.at(i, j) = m.at(i, j);
  return out;
}

GfMatrix nullspace_basis(const FieldSpec& f, const GfMatrix& m) {
  const int n = m.cols;
  RrefResult r = rref(f, m);
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;

  GfMatrix basis(n - r.rank, n);
  int row = 0;
  for (int fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    // x_fc = 1, pivot variables solve to -R[i][fc]
    basis.at(row, fc) = 1;
    for (int i = 0; i < r.rank; ++i)
      basis.at(row, r.pivot_cols[i]) =
          static_cast<std::uint8_t>(f.neg(r.mat.at(i, fc)));
    ++row;
  }
  return rref(f, basis).mat;  // canonical RREF form of the kernel
}

}  // namespace qlat
