#include "accyc/gf.hpp"

#include <algorithm>
#include <numeric>

namespace accyc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotMonic: return "NotMonic";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::Singular: return "Singular";
    case Errc::MinpolyNotDividing: return "MinpolyNotDividing";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::TowerMismatch: return "TowerMismatch";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::UnknownDescriptor: return "UnknownDescriptor";
    case Errc::SingularGenerator: return "SingularGenerator";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BadHeader: return "BadHeader";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::UnsupportedMode: return "UnsupportedMode";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

constexpr uint32_t kMaxQ = 1u << 20;
constexpr uint32_t kLutQ = 1u << 16;   // exp/log tables up to here
constexpr uint32_t kSmallQ = 256;      // full q x q add/mul tables up to here

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint32_t> prime_factors_u64(uint64_t n) {
  std::vector<uint32_t> ps;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back((uint32_t)d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back((uint32_t)n);
  return ps;
}

// --- dense GF(p) polynomial helpers for modulus checking (coeff vectors, low first) ---

using PVec = std::vector<uint32_t>;

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& mod, uint32_t p) {
  PVec r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (uint32_t)((r[i + j] + (uint64_t)a[i] * b[j]) % p);
  }
  ptrim(r);
  // reduce by monic mod
  size_t dm = mod.size() - 1;
  while (r.size() > dm) {
    uint32_t lead = r.back();
    size_t shift = r.size() - 1 - dm;
    if (lead) {
      for (size_t i = 0; i <= dm; ++i) {
        uint64_t s = (uint64_t)lead * mod[i] % p;
        uint32_t& c = r[shift + i];
        c = (uint32_t)((c + p - (uint32_t)s) % p);
      }
    }
    ptrim(r);
    if (r.size() <= dm) break;
  }
  return r;
}

PVec ppowmod_x(uint64_t e, const PVec& mod, uint32_t p) {
  // x^e mod (mod)
  PVec result{1};
  PVec base{0, 1};
  ptrim(base);
  while (e) {
    if (e & 1) result = pmulmod(result, base, mod, p);
    base = pmulmod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

PVec pgcd(PVec a, PVec b, uint32_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // a mod b
    uint32_t binv = 1;
    {  // inverse of leading coeff of b mod p
      uint32_t lb = b.back(), t = 1, base = lb, e = p - 2;
      while (e) {
        if (e & 1) t = (uint32_t)((uint64_t)t * base % p);
        base = (uint32_t)((uint64_t)base * base % p);
        e >>= 1;
      }
      binv = t;
    }
    while (a.size() >= b.size() && !a.empty()) {
      uint32_t f = (uint32_t)((uint64_t)a.back() * binv % p);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        uint64_t s = (uint64_t)f * b[i] % p;
        a[shift + i] = (uint32_t)((a[shift + i] + p - (uint32_t)s) % p);
      }
      ptrim(a);
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const PVec& f, uint32_t p) {
  // f monic of degree k >= 1 over GF(p); Rabin test.
  size_t k = f.size() - 1;
  if (k == 1) return true;
  uint64_t pk = 1;
  for (size_t i = 0; i < k; ++i) pk *= p;
  PVec xq = ppowmod_x(pk, f, p);  // x^{p^k} mod f
  PVec x{0, 1};
  // x^{p^k} == x mod f
  PVec diff = xq;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  ptrim(diff);
  if (!diff.empty()) return false;
  for (uint32_t ell : prime_factors_u64(k)) {
    uint64_t e = 1;
    for (size_t i = 0; i < k / ell; ++i) e *= p;
    PVec xe = ppowmod_x(e, f, p);
    PVec d = xe;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    ptrim(d);
    PVec g = pgcd(f, d, p);
    if (g.size() != 1) return false;  // nontrivial common factor
  }
  return true;
}

}  // namespace

Field field_create(uint32_t p, uint32_t k, const std::optional<std::vector<uint32_t>>& modulus) {
  if (!is_prime_u32(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
  if (k < 1) fail(Errc::DegreeMismatch, "k must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxQ) fail(Errc::CapExceeded, "field size p^k exceeds 2^20");
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->k_ = k;
  ctx->q_ = (uint32_t)q;

  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != k + 1 || m.back() != 1)
      fail(Errc::DegreeMismatch, "modulus must be monic of degree k");
    for (uint32_t c : m)
      if (c >= p) fail(Errc::DegreeMismatch, "modulus coefficient out of range");
    if (k >= 2 && !is_irreducible(m, p))
      fail(Errc::ReducibleModulus, "modulus is reducible over GF(p)");
    ctx->modulus_ = m;
  } else if (k == 1) {
    ctx->modulus_ = {0, 1};  // x
  } else {
    // least (c_0..c_{k-1}) lexicographically, low-degree-first
    PVec f(k + 1, 0);
    f[k] = 1;
    bool found = false;
    uint64_t count = q;  // p^k candidates
    for (uint64_t code = 0; code < count; ++code) {
      uint64_t t = code;
      // counter order: c_{k-1} is the most significant digit so that
      // increasing code enumerates tuples in low-first lexicographic order
      for (uint32_t i = 0; i < k; ++i) {
        f[k - 1 - i] = (uint32_t)(t % p);
        t /= p;
      }
      if (f[0] == 0) continue;  // divisible by x
      if (is_irreducible(f, p)) {
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::ReducibleModulus, "no irreducible polynomial found");  // unreachable
    ctx->modulus_ = f;
  }

  // exp/log tables (k > 1). Prime fields use direct modular arithmetic.
  if (k > 1 && q <= kLutQ) {
    uint32_t n1 = ctx->q_ - 1;
    auto factors = prime_factors_u64(n1);
    uint32_t gen = 0;
    for (uint32_t cand = 2; cand < ctx->q_; ++cand) {
      bool ok = true;
      for (uint32_t ell : factors) {
        // cand^{(q-1)/ell} via slow path
        uint64_t e = n1 / ell;
        uint32_t r = 1, b = cand;
        while (e) {
          if (e & 1) r = ctx->mul_nolut(r, b);
          b = ctx->mul_nolut(b, b);
          e >>= 1;
        }
        if (r == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen = cand;
        break;
      }
    }
    ctx->generator_ = gen;
    ctx->exp_.resize(2 * n1);
    ctx->log_.assign(ctx->q_, 0);
    uint32_t cur = 1;
    for (uint32_t i = 0; i < n1; ++i) {
      ctx->exp_[i] = cur;
      ctx->exp_[i + n1] = cur;
      ctx->log_[cur] = i;
      cur = ctx->mul_nolut(cur, gen);
    }
  } else if (k == 1) {
    // least primitive root mod p
    uint32_t n1 = p - 1;
    auto factors = prime_factors_u64(n1);
    uint32_t gen = (p == 2) ? 1 : 0;
    for (uint32_t cand = 2; cand < p && gen == 0; ++cand) {
      bool ok = true;
      for (uint32_t ell : factors) {
        uint64_t e = n1 / ell;
        uint32_t r = 1, b = cand;
        while (e) {
          if (e & 1) r = (uint32_t)((uint64_t)r * b % p);
          b = (uint32_t)((uint64_t)b * b % p);
          e >>= 1;
        }
        if (r == 1) {
          ok = false;
          break;
        }
      }
      if (ok) gen = cand;
    }
    ctx->generator_ = gen;
  } else {
    // large extension field: locate generator lazily is not needed; scan once
    uint32_t n1 = ctx->q_ - 1;
    auto factors = prime_factors_u64(n1);
    for (uint32_t cand = 2; cand < ctx->q_; ++cand) {
      bool ok = true;
      for (uint32_t ell : factors) {
        uint64_t e = n1 / ell;
        uint32_t r = 1, b = cand;
        while (e) {
          if (e & 1) r = ctx->mul_nolut(r, b);
          b = ctx->mul_nolut(b, b);
          e >>= 1;
        }
        if (r == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        ctx->generator_ = cand;
        break;
      }
    }
  }

  if (ctx->q_ <= kSmallQ) {
    uint32_t n = ctx->q_;
    ctx->add_tab_.resize((size_t)n * n);
    ctx->mul_tab_.resize((size_t)n * n);
    for (uint32_t a = 0; a < n; ++a)
      for (uint32_t b = 0; b < n; ++b) {
        ctx->add_tab_[(size_t)a * n + b] = ctx->add(a, b);
        ctx->mul_tab_[(size_t)a * n + b] = ctx->mul(a, b);
      }
  }
  return ctx;
}

uint32_t FieldCtx::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t r = 0, mult = 1;
  while (a || b) {
    uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

uint32_t FieldCtx::neg(uint32_t a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  uint32_t r = 0, mult = 1;
  while (a) {
    uint32_t d = a % p_;
    if (d) d = p_ - d;
    r += d * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

uint32_t FieldCtx::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldCtx::mul_nolut(uint32_t a, uint32_t b) const {
  if (k_ == 1) return (uint32_t)((uint64_t)a * b % p_);
  if (a == 0 || b == 0) return 0;
  if (p_ == 2) {
    // carryless multiply then reduce by modulus bitmask
    uint64_t x = a, y = b, acc = 0;
    while (y) {
      if (y & 1) acc ^= x;
      x <<= 1;
      y >>= 1;
    }
    uint64_t mod = 0;
    for (uint32_t i = 0; i <= k_; ++i)
      if (modulus_[i]) mod |= (1ull << i);
    int topacc = 63;
    while (topacc >= 0 && !(acc >> topacc & 1)) --topacc;
    for (int bit = topacc; bit >= (int)k_; --bit)
      if (acc >> bit & 1) acc ^= mod << (bit - k_);
    return (uint32_t)acc;
  }
  // generic: digit vectors
  uint32_t da[24], db[24];
  uint32_t ta = a, tb = b;
  for (uint32_t i = 0; i < k_; ++i) {
    da[i] = ta % p_;
    ta /= p_;
    db[i] = tb % p_;
    tb /= p_;
  }
  uint64_t prod[48] = {0};
  for (uint32_t i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (uint32_t j = 0; j < k_; ++j) prod[i + j] += (uint64_t)da[i] * db[j];
  }
  for (uint32_t i = 0; i < 2 * k_; ++i) prod[i] %= p_;
  for (int d = 2 * (int)k_ - 2; d >= (int)k_; --d) {
    uint64_t lead = prod[d] % p_;
    if (lead) {
      prod[d] = 0;
      for (uint32_t i = 0; i < k_; ++i) {
        uint64_t s = lead * modulus_[i] % p_;
        prod[d - k_ + i] = (prod[d - k_ + i] + p_ - s) % p_;
      }
    }
  }
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    r += (uint32_t)(prod[i] % p_) * mult;
    mult *= p_;
  }
  return r;
}

uint32_t FieldCtx::mul(uint32_t a, uint32_t b) const {
  if (!exp_.empty()) {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  return mul_nolut(a, b);
}

uint32_t FieldCtx::inv(uint32_t a) const {
  if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
  if (!exp_.empty()) {
    uint32_t n1 = q_ - 1;
    uint32_t l = log_[a];
    return exp_[(n1 - l) % n1];
  }
  return pow(a, q_ - 2);
}

uint32_t FieldCtx::div(uint32_t a, uint32_t b) const {
  if (b == 0) fail(Errc::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

uint32_t FieldCtx::pow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  uint64_t n1 = q_ - 1;
  e %= n1;
  if (!exp_.empty()) return exp_[(uint32_t)((uint64_t)log_[a] * e % n1)];
  uint32_t r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

uint32_t FieldCtx::from_int(uint64_t v) const {
  if (v >= q_) fail(Errc::EntryOutOfRange, "encoding " + std::to_string(v) + " >= q");
  return (uint32_t)v;
}

uint64_t FieldCtx::mult_order(uint32_t a) const {
  if (a == 0) fail(Errc::DivisionByZero, "order of zero");
  uint64_t ord = q_ - 1;
  for (uint32_t ell : prime_factors_u64(ord)) {
    while (ord % ell == 0 && pow(a, ord / ell) == 1) ord /= ell;
  }
  return ord;
}

void require_same_field(const Field& a, const Field& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_field(*b)) fail(Errc::FieldMismatch, "contexts differ");
}

}  // namespace accyc
