#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "accyc/poly.hpp"

namespace accyc {

/// Dense matrix over a FieldCtx, row-major canonical encodings.
class Mat {
 public:
  Mat(Field ctx, size_t rows, size_t cols);
  Mat(Field ctx, size_t rows, size_t cols, std::vector<uint32_t> entries);
  static Mat identity(Field ctx, size_t n);
  static Mat companion(const Poly& monic);  // NotMonic unless monic of degree >= 1

  const Field& ctx() const { return ctx_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  uint32_t at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  uint32_t& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const std::vector<uint32_t>& entries() const { return e_; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.ctx_->same_field(*b.ctx_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.e_ == b.e_;
  }

 private:
  Field ctx_;
  size_t rows_, cols_;
  std::vector<uint32_t> e_;
};

Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_pow(const Mat& a, uint64_t n);               // NotSquare unless square
Mat mat_scalar_mul(const Mat& a, uint32_t c);
Mat mat_sub_scalar(const Mat& a, uint32_t lambda);    // A - lambda * Id, square only
bool mat_is_identity(const Mat& a);
bool mat_is_scalar(const Mat& a);

/// (rank, nullity = cols - rank), Gaussian elimination with any-nonzero pivoting.
std::pair<size_t, size_t> rank_nullity(const Mat& a);
bool mat_invertible(const Mat& a);
Mat mat_inverse(const Mat& a);                        // Singular if not invertible

/// Monic characteristic polynomial det(x Id - A): Hessenberg reduction over
/// the field, then the leading-minor recurrence. Division-free integer
/// methods break in characteristic p, so they are not used.
Poly charpoly(const Mat& a);

/// Monic minimal polynomial: lcm of the order polynomials of all standard
/// basis vectors (Krylov spinning). Deterministic, no randomization. Asserts
/// the Cayley-Hamilton divisibility minpoly | charpoly.
Poly minpoly(const Mat& a);

/// Invariant factors f_1 | f_2 | ... | f_t (monic, nonconstant, product =
/// charpoly, last = minpoly) via Smith normal form of x Id - A over F[x].
std::vector<Poly> invariant_factors(const Mat& a);

inline constexpr uint64_t kDefaultOrderCap = 1000000;

/// Least n <= cap with A^n = Id, nullopt if the cap is hit. Singular if A is
/// not invertible.
std::optional<uint64_t> element_order(const Mat& a, uint64_t cap = kDefaultOrderCap);

}  // namespace accyc
