#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "accyc/gf.hpp"

namespace accyc {

/// Dense univariate polynomial over a FieldCtx, low-degree-first coefficients,
/// trailing (highest) stored coefficient nonzero. The zero polynomial has an
/// empty coefficient list; its degree is nullopt, never -1 arithmetic.
class Poly {
 public:
  Poly(Field ctx, std::vector<uint32_t> coeffs);
  static Poly zero(Field ctx) { return Poly(std::move(ctx), {}); }
  static Poly one(Field ctx) { return Poly(std::move(ctx), {1}); }
  static Poly constant(Field ctx, uint32_t c) { return Poly(std::move(ctx), {c}); }
  /// x - alpha
  static Poly linear(Field ctx, uint32_t alpha);

  const Field& ctx() const { return ctx_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return (int)c_.size() - 1;
  }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return lead() == 1; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ctx_->same_field(*b.ctx_) && a.c_ == b.c_;
  }

  Poly monic() const;  // DivisionByZero on the zero polynomial
  Poly pow(uint64_t e) const;

  /// Space-separated coefficient encodings, low degree first ("0" for zero).
  std::string to_string() const;

 private:
  Field ctx_;
  std::vector<uint32_t> c_;
};

/// (quotient, remainder), deg rem < deg divisor. DivisionByZero if g = 0.
std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g);
/// Monic gcd; gcd(0,0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);
/// Formal derivative (correct in characteristic p).
Poly poly_derivative(const Poly& f);
/// Evaluate at a point (encoding).
uint32_t poly_eval(const Poly& f, uint32_t point);
Poly poly_lcm(const Poly& f, const Poly& g);
bool poly_divides(const Poly& d, const Poly& f);

/// Squarefree test that handles the characteristic-p caveat: a nonconstant
/// polynomial with vanishing derivative is a p-th power, hence not squarefree.
bool poly_is_squarefree(const Poly& f);

struct PowerOfLinear {
  enum class Kind { None, Constant, Power } kind;
  uint32_t alpha = 0;  // valid when kind == Power
  int mult = 0;        // k with f = (x - alpha)^k
};

/// Decide whether monic f equals (x - alpha)^{deg f} for some alpha in the
/// base field. The candidate alpha is extracted from one coefficient (via a
/// Frobenius preimage when p | deg f), then the equality is checked exactly;
/// no factorization is performed. NotMonic if f is not monic.
PowerOfLinear is_power_of_linear(const Poly& f);

/// All roots in the base field with multiplicities, sorted by encoding.
/// Exhaustive scan over the field (q <= 2^20). ZeroPolynomial if f = 0.
std::vector<std::pair<uint32_t, int>> roots_in_field(const Poly& f);

}  // namespace accyc
