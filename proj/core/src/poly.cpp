#include "accyc/poly.hpp"

#include <algorithm>

namespace accyc {

namespace {
void trim(std::vector<uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

Poly::Poly(Field ctx, std::vector<uint32_t> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (uint32_t x : c_)
    if (!ctx_->is_valid(x)) fail(Errc::EntryOutOfRange, "coefficient out of range");
  trim(c_);
}

Poly Poly::linear(Field ctx, uint32_t alpha) {
  uint32_t na = ctx->neg(alpha);
  return Poly(std::move(ctx), {na, 1});
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a.ctx_, b.ctx_);
  const FieldCtx& F = *a.ctx_;
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  trim(c);
  return Poly(a.ctx_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a.ctx_, b.ctx_);
  const FieldCtx& F = *a.ctx_;
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  trim(c);
  return Poly(a.ctx_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.ctx_, b.ctx_);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.ctx_);
  const FieldCtx& F = *a.ctx_;
  std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  trim(c);
  return Poly(a.ctx_, std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) fail(Errc::DivisionByZero, "monic() of zero polynomial");
  if (is_monic()) return *this;
  uint32_t li = ctx_->inv(lead());
  std::vector<uint32_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = ctx_->mul(c_[i], li);
  return Poly(ctx_, std::move(c));
}

Poly Poly::pow(uint64_t e) const {
  Poly r = Poly::one(ctx_);
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c_[i]);
  }
  return s;
}

std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g) {
  require_same_field(f.ctx(), g.ctx());
  if (g.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  const FieldCtx& F = *f.ctx();
  std::vector<uint32_t> rem = f.coeffs();
  size_t dg = g.coeffs().size() - 1;
  if (rem.size() <= dg) return {Poly::zero(f.ctx()), f};
  std::vector<uint32_t> quot(rem.size() - dg, 0);
  uint32_t glead_inv = F.inv(g.lead());
  for (size_t i = rem.size(); i-- > dg;) {
    if (rem.size() <= i || rem[i] == 0) continue;
    uint32_t factor = F.mul(rem[i], glead_inv);
    quot[i - dg] = factor;
    for (size_t j = 0; j <= dg; ++j)
      rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(factor, g.coeffs()[j]));
  }
  trim(rem);
  trim(quot);
  return {Poly(f.ctx(), std::move(quot)), Poly(f.ctx(), std::move(rem))};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  require_same_field(f.ctx(), g.ctx());
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = poly_divrem(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Poly poly_derivative(const Poly& f) {
  if (f.is_zero() || f.coeffs().size() == 1) return Poly::zero(f.ctx());
  const FieldCtx& F = *f.ctx();
  std::vector<uint32_t> c(f.coeffs().size() - 1, 0);
  for (size_t i = 1; i < f.coeffs().size(); ++i) {
    uint32_t m = (uint32_t)(i % F.p());
    uint32_t scalar = 0;
    for (uint32_t t = 0; t < m; ++t) scalar = F.add(scalar, 1);
    c[i - 1] = F.mul(scalar, f.coeffs()[i]);
  }
  return Poly(f.ctx(), std::move(c));
}

uint32_t poly_eval(const Poly& f, uint32_t point) {
  const FieldCtx& F = *f.ctx();
  uint32_t acc = 0;
  for (size_t i = f.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, point), f.coeffs()[i]);
  return acc;
}

Poly poly_lcm(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly::zero(f.ctx());
  Poly d = poly_gcd(f, g);
  return (poly_divrem(f * g, d).first).monic();
}

bool poly_divides(const Poly& d, const Poly& f) {
  if (d.is_zero()) return f.is_zero();
  return poly_divrem(f, d).second.is_zero();
}

bool poly_is_squarefree(const Poly& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "squarefree test of zero");
  if (f.coeffs().size() <= 1) return true;
  Poly d = poly_derivative(f);
  if (d.is_zero()) return false;  // f = h(x^p) is a p-th power
  Poly g = poly_gcd(f, d);
  return g.degree() == 0;
}

PowerOfLinear is_power_of_linear(const Poly& f) {
  if (f.is_zero() || !f.is_monic()) fail(Errc::NotMonic, "is_power_of_linear needs a monic input");
  const Field& ctx = f.ctx();
  const FieldCtx& F = *ctx;
  int k = *f.degree();
  if (k == 0) return {PowerOfLinear::Kind::Constant, 0, 0};

  // f = (x - a)^k forces the coefficient at x^{p^v (k'-1)} to be -k' a^{p^v},
  // where k = p^v k' with p coprime to k'. Frobenius is invertible, so a is
  // determined; the final equality check is exact.
  uint32_t p = F.p();
  int v = 0;
  int kk = k;
  while (kk % (int)p == 0) {
    kk /= (int)p;
    ++v;
  }
  uint32_t kk_scalar = 0;
  for (int t = 0; t < kk % (int)p; ++t) kk_scalar = F.add(kk_scalar, 1);
  uint64_t idx = 1;
  for (int t = 0; t < v; ++t) idx *= p;
  idx *= (uint64_t)(kk - 1);
  uint32_t c = f.coeff((size_t)idx);
  uint32_t beta = F.div(F.neg(c), kk_scalar);  // beta = a^{p^v}
  uint32_t a = beta;
  if (v > 0) {
    uint32_t m = F.k();
    uint32_t steps = (m - (uint32_t)(v % m)) % m;  // Frobenius^{-v} = Frobenius^{m-v mod m}
    for (uint32_t t = 0; t < steps; ++t) a = F.frobenius(a);
  }
  Poly cand = Poly::linear(ctx, a).pow((uint64_t)k);
  if (cand == f) return {PowerOfLinear::Kind::Power, a, k};
  return {PowerOfLinear::Kind::None, 0, 0};
}

std::vector<std::pair<uint32_t, int>> roots_in_field(const Poly& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "roots of the zero polynomial");
  const FieldCtx& F = *f.ctx();
  std::vector<std::pair<uint32_t, int>> out;
  for (uint32_t a = 0; a < F.q(); ++a) {
    if (poly_eval(f, a) != 0) continue;
    Poly rem = f;
    Poly lin = Poly::linear(f.ctx(), a);
    int mult = 0;
    while (true) {
      auto [q, r] = poly_divrem(rem, lin);
      if (!r.is_zero()) break;
      ++mult;
      rem = q;
    }
    out.emplace_back(a, mult);
  }
  return out;
}

}  // namespace accyc
