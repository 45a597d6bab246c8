#include "accyc/matgf.hpp"

#include <algorithm>

namespace accyc {

Mat::Mat(Field ctx, size_t rows, size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Mat::Mat(Field ctx, size_t rows, size_t cols, std::vector<uint32_t> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) fail(Errc::CountMismatch, "entry count != rows*cols");
  for (uint32_t x : e_)
    if (!ctx_->is_valid(x)) fail(Errc::EntryOutOfRange, "matrix entry out of range");
}

Mat Mat::identity(Field ctx, size_t n) {
  Mat m(std::move(ctx), n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::companion(const Poly& f) {
  if (f.is_zero() || !f.is_monic() || *f.degree() < 1)
    fail(Errc::NotMonic, "companion matrix needs a monic polynomial of degree >= 1");
  size_t n = (size_t)*f.degree();
  const FieldCtx& F = *f.ctx();
  Mat m(f.ctx(), n, n);
  for (size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  for (size_t i = 0; i < n; ++i) m.at(i, n - 1) = F.neg(f.coeffs()[i]);
  return m;
}

namespace {
void require_same_shape(const Mat& a, const Mat& b) {
  require_same_field(a.ctx(), b.ctx());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::DimensionMismatch, "shapes differ");
}
}  // namespace

Mat mat_add(const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  const FieldCtx& F = *a.ctx();
  std::vector<uint32_t> e(a.entries().size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = F.add(a.entries()[i], b.entries()[i]);
  return Mat(a.ctx(), a.rows(), a.cols(), std::move(e));
}

Mat mat_sub(const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  const FieldCtx& F = *a.ctx();
  std::vector<uint32_t> e(a.entries().size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = F.sub(a.entries()[i], b.entries()[i]);
  return Mat(a.ctx(), a.rows(), a.cols(), std::move(e));
}

Mat mat_mul(const Mat& a, const Mat& b) {
  require_same_field(a.ctx(), b.ctx());
  if (a.cols() != b.rows()) fail(Errc::DimensionMismatch, "inner dimensions differ");
  const FieldCtx& F = *a.ctx();
  Mat r(a.ctx(), a.rows(), b.cols());
  const uint32_t* mt = F.mul_table();
  const uint32_t* at = F.add_table();
  size_t n = a.cols(), bc = b.cols();
  if (mt && at) {
    uint32_t q = F.q();
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t k = 0; k < n; ++k) {
        uint32_t aik = a.at(i, k);
        if (!aik) continue;
        const uint32_t* mrow = mt + (size_t)aik * q;
        for (size_t j = 0; j < bc; ++j) {
          uint32_t& rij = r.at(i, j);
          rij = at[(size_t)rij * q + mrow[b.at(k, j)]];
        }
      }
  } else {
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t k = 0; k < n; ++k) {
        uint32_t aik = a.at(i, k);
        if (!aik) continue;
        for (size_t j = 0; j < bc; ++j)
          r.at(i, j) = F.add(r.at(i, j), F.mul(aik, b.at(k, j)));
      }
  }
  return r;
}

Mat mat_pow(const Mat& a, uint64_t n) {
  if (!a.is_square()) fail(Errc::NotSquare, "pow of non-square matrix");
  Mat r = Mat::identity(a.ctx(), a.rows());
  Mat b = a;
  while (n) {
    if (n & 1) r = mat_mul(r, b);
    b = mat_mul(b, b);
    n >>= 1;
  }
  return r;
}

Mat mat_scalar_mul(const Mat& a, uint32_t c) {
  const FieldCtx& F = *a.ctx();
  Mat r = a;
  for (size_t i = 0; i < r.rows(); ++i)
    for (size_t j = 0; j < r.cols(); ++j) r.at(i, j) = F.mul(a.at(i, j), c);
  return r;
}

Mat mat_sub_scalar(const Mat& a, uint32_t lambda) {
  if (!a.is_square()) fail(Errc::NotSquare, "A - lambda*Id needs a square matrix");
  const FieldCtx& F = *a.ctx();
  Mat r = a;
  for (size_t i = 0; i < r.rows(); ++i) r.at(i, i) = F.sub(a.at(i, i), lambda);
  return r;
}

bool mat_is_identity(const Mat& a) {
  if (!a.is_square()) return false;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool mat_is_scalar(const Mat& a) {
  if (!a.is_square() || a.rows() == 0) return false;
  uint32_t d = a.at(0, 0);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != (i == j ? d : 0u)) return false;
  return true;
}

std::pair<size_t, size_t> rank_nullity(const Mat& a) {
  const FieldCtx& F = *a.ctx();
  std::vector<uint32_t> m = a.entries();
  size_t rows = a.rows(), cols = a.cols();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rows;
    for (size_t r = rank; r < rows; ++r)
      if (m[r * cols + col]) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    if (piv != rank)
      for (size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
    uint32_t pinv = F.inv(m[rank * cols + col]);
    for (size_t j = col; j < cols; ++j) m[rank * cols + j] = F.mul(m[rank * cols + j], pinv);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      uint32_t f = m[r * cols + col];
      if (!f) continue;
      for (size_t j = col; j < cols; ++j)
        m[r * cols + j] = F.sub(m[r * cols + j], F.mul(f, m[rank * cols + j]));
    }
    ++rank;
  }
  return {rank, cols - rank};
}

bool mat_invertible(const Mat& a) {
  if (!a.is_square()) return false;
  return rank_nullity(a).first == a.rows();
}

Mat mat_inverse(const Mat& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "inverse of non-square matrix");
  const FieldCtx& F = *a.ctx();
  size_t n = a.rows();
  std::vector<uint32_t> m(n * 2 * n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i * 2 * n + j] = a.at(i, j);
    m[i * 2 * n + n + i] = 1;
  }
  size_t cols = 2 * n;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = n;
    for (size_t r = col; r < n; ++r)
      if (m[r * cols + col]) {
        piv = r;
        break;
      }
    if (piv == n) fail(Errc::Singular, "matrix not invertible");
    if (piv != col)
      for (size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[col * cols + j]);
    uint32_t pinv = F.inv(m[col * cols + col]);
    for (size_t j = 0; j < cols; ++j) m[col * cols + j] = F.mul(m[col * cols + j], pinv);
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      uint32_t f = m[r * cols + col];
      if (!f) continue;
      for (size_t j = 0; j < cols; ++j)
        m[r * cols + j] = F.sub(m[r * cols + j], F.mul(f, m[col * cols + j]));
    }
  }
  Mat inv(a.ctx(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = m[i * cols + n + j];
  return inv;
}

Poly charpoly(const Mat& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "charpoly of non-square matrix");
  const Field& ctx = a.ctx();
  const FieldCtx& F = *ctx;
  size_t n = a.rows();
  if (n == 0) return Poly::one(ctx);

  // similarity reduction to upper Hessenberg form
  std::vector<uint32_t> h = a.entries();
  auto H = [&](size_t i, size_t j) -> uint32_t& { return h[i * n + j]; };
  for (size_t col = 0; col + 2 < n; ++col) {
    // choose pivot in column col below the subdiagonal
    size_t piv = 0;
    bool found = false;
    for (size_t r = col + 1; r < n; ++r)
      if (H(r, col)) {
        piv = r;
        found = true;
        break;
      }
    if (!found) continue;
    if (piv != col + 1) {
      for (size_t j = 0; j < n; ++j) std::swap(H(piv, j), H(col + 1, j));
      for (size_t i = 0; i < n; ++i) std::swap(H(i, piv), H(i, col + 1));
    }
    uint32_t pinv = F.inv(H(col + 1, col));
    for (size_t r = col + 2; r < n; ++r) {
      uint32_t f = F.mul(H(r, col), pinv);
      if (!f) continue;
      // row r -= f * row col+1 ; col col+1 += f * col r  (similarity)
      for (size_t j = 0; j < n; ++j) H(r, j) = F.sub(H(r, j), F.mul(f, H(col + 1, j)));
      for (size_t i = 0; i < n; ++i) H(i, col + 1) = F.add(H(i, col + 1), F.mul(f, H(i, r)));
    }
  }

  // p_j = charpoly of leading j x j block of the Hessenberg matrix
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::one(ctx));
  for (size_t j = 1; j <= n; ++j) {
    Poly xm = Poly(ctx, {F.neg(H(j - 1, j - 1)), 1});
    Poly cur = xm * p[j - 1];
    uint32_t sub = 1;  // product of subdiagonal entries H(i+1,i) for i = m..j-2
    for (size_t m = j - 1; m-- > 0;) {
      sub = F.mul(sub, H(m + 1, m));
      if (sub == 0) break;
      uint32_t coef = F.mul(H(m, j - 1), sub);
      if (coef) cur = cur - Poly::constant(ctx, coef) * p[m];
    }
    p.push_back(cur);
  }
  return p[n];
}

namespace {

// order polynomial of vector v under A: least monic g with g(A)v = 0
Poly order_poly(const Mat& a, std::vector<uint32_t> v) {
  const Field& ctx = a.ctx();
  const FieldCtx& F = *ctx;
  size_t n = a.rows();
  // echelon basis rows with pivot positions; each row carries its expression
  // in terms of Krylov vectors
  std::vector<std::vector<uint32_t>> basis;       // reduced vectors
  std::vector<std::vector<uint32_t>> expr;        // coords over Krylov sequence
  std::vector<size_t> pivots;
  std::vector<uint32_t> cur = std::move(v);
  for (size_t step = 0; step <= n; ++step) {
    std::vector<uint32_t> red = cur;
    std::vector<uint32_t> coord(step + 1, 0);
    coord[step] = 1;
    for (size_t b = 0; b < basis.size(); ++b) {
      uint32_t f = red[pivots[b]];
      if (!f) continue;
      for (size_t j = 0; j < n; ++j) red[j] = F.sub(red[j], F.mul(f, basis[b][j]));
      for (size_t j = 0; j < expr[b].size() && j < coord.size(); ++j)
        coord[j] = F.sub(coord[j], F.mul(f, expr[b][j]));
    }
    size_t piv = n;
    for (size_t j = 0; j < n; ++j)
      if (red[j]) {
        piv = j;
        break;
      }
    if (piv == n) {
      // dependency: sum coord[i] * A^i v = 0 -> monic order polynomial
      std::vector<uint32_t> cs(coord.begin(), coord.end());
      Poly g(ctx, std::move(cs));
      return g.monic();
    }
    uint32_t pinv = F.inv(red[piv]);
    for (size_t j = 0; j < n; ++j) red[j] = F.mul(red[j], pinv);
    for (auto& c : coord) c = F.mul(c, pinv);
    basis.push_back(std::move(red));
    expr.push_back(std::move(coord));
    pivots.push_back(piv);
    // next Krylov vector
    std::vector<uint32_t> nxt(n, 0);
    for (size_t i = 0; i < n; ++i) {
      uint32_t acc = 0;
      for (size_t j = 0; j < n; ++j) acc = F.add(acc, F.mul(a.at(i, j), cur[j]));
      nxt[i] = acc;
    }
    cur = std::move(nxt);
  }
  fail(Errc::MinpolyNotDividing, "Krylov spinning failed to terminate");
}

}  // namespace

Poly minpoly(const Mat& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "minpoly of non-square matrix");
  const Field& ctx = a.ctx();
  size_t n = a.rows();
  if (n == 0) return Poly::one(ctx);
  Poly m = Poly::one(ctx);
  for (size_t i = 0; i < n; ++i) {
    std::vector<uint32_t> ei(n, 0);
    ei[i] = 1;
    m = poly_lcm(m, order_poly(a, std::move(ei)));
    if ((size_t)*m.degree() == n) break;
  }
  Poly cp = charpoly(a);
  if (!poly_divides(m, cp))
    fail(Errc::MinpolyNotDividing, "internal consistency failure: minpoly does not divide charpoly");
  return m;
}

std::vector<Poly> invariant_factors(const Mat& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "invariant factors of non-square matrix");
  const Field& ctx = a.ctx();
  size_t n = a.rows();
  // M = x Id - A over F[x]
  std::vector<Poly> m;
  m.reserve(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j)
        m.push_back(Poly(ctx, {ctx->neg(a.at(i, j)), 1}));
      else
        m.push_back(a.at(i, j) ? Poly::constant(ctx, ctx->neg(a.at(i, j))) : Poly::zero(ctx));
    }
  auto M = [&](size_t i, size_t j) -> Poly& { return m[i * n + j]; };

  std::vector<Poly> diag;
  size_t top = 0;
  while (top < n) {
    // pivot: nonzero entry of least degree in the trailing block
    size_t pi = n, pj = n;
    int best = -1;
    for (size_t i = top; i < n; ++i)
      for (size_t j = top; j < n; ++j) {
        if (M(i, j).is_zero()) continue;
        int d = *M(i, j).degree();
        if (best < 0 || d < best) {
          best = d;
          pi = i;
          pj = j;
        }
      }
    if (best < 0) {
      diag.push_back(Poly::zero(ctx));
      ++top;
      continue;
    }
    if (pi != top)
      for (size_t j = top; j < n; ++j) std::swap(M(pi, j), M(top, j));
    if (pj != top)
      for (size_t i = top; i < n; ++i) std::swap(M(i, pj), M(i, top));

    bool clean = true;
    for (size_t i = top + 1; i < n; ++i) {
      if (M(i, top).is_zero()) continue;
      auto [q, r] = poly_divrem(M(i, top), M(top, top));
      for (size_t j = top; j < n; ++j) M(i, j) = M(i, j) - q * M(top, j);
      if (!M(i, top).is_zero()) clean = false;
    }
    for (size_t j = top + 1; j < n; ++j) {
      if (M(top, j).is_zero()) continue;
      auto [q, r] = poly_divrem(M(top, j), M(top, top));
      for (size_t i = top; i < n; ++i) M(i, j) = M(i, j) - M(i, top) * q;
      if (!M(top, j).is_zero()) clean = false;
    }
    if (!clean) continue;  // smaller-degree entries appeared, re-pivot

    // pivot must divide the whole trailing block
    bool divides_all = true;
    for (size_t i = top + 1; i < n && divides_all; ++i)
      for (size_t j = top + 1; j < n && divides_all; ++j) {
        if (M(i, j).is_zero()) continue;
        if (!poly_divrem(M(i, j), M(top, top)).second.is_zero()) {
          // fold row i into row top and restart this pivot
          for (size_t jj = top; jj < n; ++jj) M(top, jj) = M(top, jj) + M(i, jj);
          divides_all = false;
        }
      }
    if (!divides_all) continue;

    diag.push_back(M(top, top).monic());
    ++top;
  }

  std::vector<Poly> out;
  for (auto& d : diag)
    if (!(d.degree() == 0)) out.push_back(d);
  // ascending divisibility order already holds by construction
  return out;
}

std::optional<uint64_t> element_order(const Mat& a, uint64_t cap) {
  if (!a.is_square()) fail(Errc::NotSquare, "order of non-square matrix");
  if (!mat_invertible(a)) fail(Errc::Singular, "order of a singular matrix");
  Mat cur = a;
  for (uint64_t k = 1; k <= cap; ++k) {
    if (mat_is_identity(cur)) return k;
    cur = mat_mul(cur, a);
  }
  return std::nullopt;
}

}  // namespace accyc
