#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "accyc/errors.hpp"

namespace accyc {

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// Immutable description of GF(p^k), p^k <= 2^20. Elements are canonical
/// integer encodings e = sum c_i p^i of the polynomial-basis coordinates,
/// 0 <= e < q. Safe to share across threads after creation.
class FieldCtx {
 public:
  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }
  /// Monic irreducible modulus, low-degree-first, length k+1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;          // DivisionByZero on 0
  uint32_t div(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t frobenius(uint32_t a) const { return pow(a, p_); }

  uint32_t from_int(uint64_t v) const;     // EntryOutOfRange if v >= q
  bool is_valid(uint32_t a) const { return a < q_; }

  /// Multiplicative order of a nonzero element.
  uint64_t mult_order(uint32_t a) const;
  /// Least-encoding generator of the multiplicative group.
  uint32_t generator() const { return generator_; }

  /// q x q add/mul tables, present when q <= 256 (hot loops index these directly).
  const uint32_t* add_table() const { return add_tab_.empty() ? nullptr : add_tab_.data(); }
  const uint32_t* mul_table() const { return mul_tab_.empty() ? nullptr : mul_tab_.data(); }

  bool same_field(const FieldCtx& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  friend Field field_create(uint32_t p, uint32_t k,
                            const std::optional<std::vector<uint32_t>>& modulus);
  FieldCtx() = default;

  uint32_t mul_nolut(uint32_t a, uint32_t b) const;

  uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;
  // exp/log tables for k > 1 (exp_ has 2(q-1) entries so sums of logs need no reduction)
  std::vector<uint32_t> exp_, log_;
  std::vector<uint32_t> add_tab_, mul_tab_;
  uint32_t generator_ = 0;
};

/// Build GF(p^k). When modulus is omitted, the lexicographically least monic
/// irreducible of degree k over GF(p) (coefficients compared low-degree-first)
/// is selected, so contexts are reproducible across runs.
Field field_create(uint32_t p, uint32_t k,
                   const std::optional<std::vector<uint32_t>>& modulus = std::nullopt);

void require_same_field(const Field& a, const Field& b);

/// Plain field element value: context + canonical encoding.
class Fel {
 public:
  Fel(Field ctx, uint32_t rep) : ctx_(std::move(ctx)), rep_(rep) {
    if (!ctx_->is_valid(rep_)) fail(Errc::EntryOutOfRange, "element encoding out of range");
  }
  const Field& ctx() const { return ctx_; }
  uint32_t rep() const { return rep_; }

  friend Fel operator+(const Fel& a, const Fel& b) { return a.bin(b, &FieldCtx::add); }
  friend Fel operator-(const Fel& a, const Fel& b) { return a.bin(b, &FieldCtx::sub); }
  friend Fel operator*(const Fel& a, const Fel& b) { return a.bin(b, &FieldCtx::mul); }
  friend Fel operator/(const Fel& a, const Fel& b) { return a.bin(b, &FieldCtx::div); }
  Fel inv() const { return Fel(ctx_, ctx_->inv(rep_)); }
  Fel pow(uint64_t e) const { return Fel(ctx_, ctx_->pow(rep_, e)); }
  Fel frobenius() const { return Fel(ctx_, ctx_->frobenius(rep_)); }
  friend bool operator==(const Fel& a, const Fel& b) {
    return a.ctx_->same_field(*b.ctx_) && a.rep_ == b.rep_;
  }

 private:
  Fel bin(const Fel& o, uint32_t (FieldCtx::*op)(uint32_t, uint32_t) const) const {
    if (!ctx_->same_field(*o.ctx_)) fail(Errc::FieldMismatch, "elements from different fields");
    return Fel(ctx_, (ctx_.get()->*op)(rep_, o.rep_));
  }
  Field ctx_;
  uint32_t rep_;
};

}  // namespace accyc
