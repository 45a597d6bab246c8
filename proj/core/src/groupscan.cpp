#include "accyc/groupscan.hpp"

#include <algorithm>
#include <mutex>
#include <random>

namespace accyc {

namespace {

// digits that fit one 64-bit word: largest t with q^t < 2^63
unsigned digits_per_word(uint32_t q) {
  unsigned t = 0;
  unsigned __int128 acc = 1;
  while (acc * q < ((unsigned __int128)1 << 63)) {
    acc *= q;
    ++t;
  }
  return t;
}

struct PackShape {
  unsigned total;
  unsigned first;  // digits in word 0
};

PackShape pack_shape(uint32_t q, size_t dim) {
  unsigned total = (unsigned)(dim * dim);
  unsigned dw = digits_per_word(q);
  if (total > 2 * dw) fail(Errc::CapExceeded, "matrix too large to pack for closure");
  return {total, std::min(total, dw)};
}

constexpr uint64_t kEmpty = ~0ull;

// open-addressing set of PackedMat
class PackedSet {
 public:
  explicit PackedSet(uint64_t expected) {
    size_t want = 16;
    while (want < expected * 2) want <<= 1;
    slots_.assign(want * 2, kEmpty);
    mask_ = want - 1;
  }
  bool insert(const PackedMat& k) {
    size_t i = (size_t)(packed_hash(k) & mask_);
    for (;;) {
      uint64_t* s = &slots_[i * 2];
      if (s[0] == kEmpty && s[1] == kEmpty) {
        s[0] = k.w[0];
        s[1] = k.w[1];
        ++size_;
        maybe_grow();
        return true;
      }
      if (s[0] == k.w[0] && s[1] == k.w[1]) return false;
      i = (i + 1) & mask_;
    }
  }
  uint64_t size() const { return size_; }

 private:
  void maybe_grow() {
    if (size_ * 4 < (mask_ + 1) * 3) return;
    std::vector<uint64_t> old = std::move(slots_);
    size_t want = (mask_ + 1) * 2;
    slots_.assign(want * 2, kEmpty);
    mask_ = want - 1;
    size_ = 0;
    for (size_t j = 0; j + 1 < old.size(); j += 2) {
      if (old[j] == kEmpty && old[j + 1] == kEmpty) continue;
      PackedMat k;
      k.w = {old[j], old[j + 1]};
      insert(k);
    }
  }
  std::vector<uint64_t> slots_;
  size_t mask_ = 0;
  uint64_t size_ = 0;
};

// raw row-major multiply, out = a * b, n x n
void mul_into(const FieldCtx& F, size_t n, const uint32_t* a, const uint32_t* b, uint32_t* out) {
  std::fill(out, out + n * n, 0u);
  const uint32_t* mt = F.mul_table();
  const uint32_t* at = F.add_table();
  if (mt && at) {
    uint32_t q = F.q();
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        uint32_t aik = a[i * n + k];
        if (!aik) continue;
        const uint32_t* mrow = mt + (size_t)aik * q;
        const uint32_t* brow = b + k * n;
        uint32_t* orow = out + i * n;
        for (size_t j = 0; j < n; ++j) orow[j] = at[(size_t)orow[j] * q + mrow[brow[j]]];
      }
  } else {
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        uint32_t aik = a[i * n + k];
        if (!aik) continue;
        for (size_t j = 0; j < n; ++j)
          out[i * n + j] = F.add(out[i * n + j], F.mul(aik, b[k * n + j]));
      }
  }
}

bool is_identity_raw(size_t n, const uint32_t* a) {
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (a[i * n + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

uint64_t order_raw(const FieldCtx& F, size_t n, const uint32_t* a, uint64_t cap) {
  std::vector<uint32_t> cur(a, a + n * n), nxt(n * n);
  for (uint64_t k = 1; k <= cap; ++k) {
    if (is_identity_raw(n, cur.data())) return k;
    mul_into(F, n, cur.data(), a, nxt.data());
    cur.swap(nxt);
  }
  fail(Errc::CapExceeded, "element order exceeds cap");
}

}  // namespace

void validate_group_spec(const GroupSpec& spec) {
  if (spec.gens.empty()) fail(Errc::InvalidArgument, "group spec has no generators");
  for (const Mat& g : spec.gens) {
    require_same_field(spec.ctx, g.ctx());
    if (!g.is_square() || g.rows() != spec.dim)
      fail(Errc::DimensionMismatch, "generator size differs from group dimension");
    if (!mat_invertible(g)) fail(Errc::SingularGenerator, "generator is singular");
  }
}

PackedMat pack_mat(const Mat& m) {
  auto shape = pack_shape(m.ctx()->q(), m.rows());
  uint32_t q = m.ctx()->q();
  PackedMat k;
  uint64_t w = 0;
  for (unsigned i = shape.first; i-- > 0;) w = w * q + m.entries()[i];
  k.w[0] = w;
  w = 0;
  for (unsigned i = shape.total; i-- > shape.first;) w = w * q + m.entries()[i];
  k.w[1] = w;
  return k;
}

Mat unpack_mat(const Field& ctx, size_t dim, const PackedMat& key) {
  auto shape = pack_shape(ctx->q(), dim);
  uint32_t q = ctx->q();
  std::vector<uint32_t> e(shape.total);
  uint64_t w = key.w[0];
  for (unsigned i = 0; i < shape.first; ++i) {
    e[i] = (uint32_t)(w % q);
    w /= q;
  }
  w = key.w[1];
  for (unsigned i = shape.first; i < shape.total; ++i) {
    e[i] = (uint32_t)(w % q);
    w /= q;
  }
  return Mat(ctx, dim, dim, std::move(e));
}

uint64_t packed_hash(const PackedMat& key) {
  auto mix = [](uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  };
  return mix(key.w[0] ^ mix(key.w[1]));
}

ClosureResult closure_enumerate(const GroupSpec& spec, uint64_t cap) {
  if (cap < 1) fail(Errc::InvalidArgument, "cap must be >= 1");
  validate_group_spec(spec);
  const FieldCtx& F = *spec.ctx;
  size_t n = spec.dim;

  std::vector<std::vector<uint32_t>> gens;
  for (const Mat& g : spec.gens) gens.push_back(g.entries());

  ClosureResult res;
  PackedSet seen(4096);
  Mat id = Mat::identity(spec.ctx, n);
  PackedMat idk = pack_mat(id);
  seen.insert(idk);
  res.elements.push_back(idk);

  std::vector<uint32_t> cur(n * n), nxt(n * n);
  for (size_t head = 0; head < res.elements.size(); ++head) {
    Mat m = unpack_mat(spec.ctx, n, res.elements[head]);
    std::copy(m.entries().begin(), m.entries().end(), cur.begin());
    for (const auto& g : gens) {
      mul_into(F, n, cur.data(), g.data(), nxt.data());
      Mat prod(spec.ctx, n, n, nxt);
      PackedMat key = pack_mat(prod);
      if (seen.insert(key)) {
        res.elements.push_back(key);
        if (res.elements.size() > cap)
          fail(Errc::CapExceeded, "closure exceeds cap of " + std::to_string(cap));
      }
    }
  }
  res.order = res.elements.size();

  res.element_orders.resize(res.elements.size());
  for (size_t i = 0; i < res.elements.size(); ++i) {
    Mat m = unpack_mat(spec.ctx, n, res.elements[i]);
    uint64_t o = order_raw(F, n, m.entries().data(), kDefaultOrderCap);
    res.element_orders[i] = (uint32_t)o;
    ++res.order_histogram[o];
  }
  return res;
}

std::vector<Mat> random_elements(const GroupSpec& spec, size_t count, uint64_t seed) {
  if (count < 1) fail(Errc::InvalidArgument, "count must be >= 1");
  validate_group_spec(spec);
  const FieldCtx& F = *spec.ctx;
  size_t n = spec.dim;

  std::vector<std::vector<uint32_t>> slots;
  for (const Mat& g : spec.gens) slots.push_back(g.entries());
  while (slots.size() < 4) slots.push_back(slots[slots.size() % spec.gens.size()]);

  std::mt19937_64 rng(seed);
  std::vector<uint32_t> tmp(n * n);
  auto step = [&]() -> size_t {
    size_t s = slots.size();
    size_t i = (size_t)(rng() % s);
    size_t j = (size_t)(rng() % s);
    while (j == i) j = (size_t)(rng() % s);
    mul_into(F, n, slots[i].data(), slots[j].data(), tmp.data());
    slots[i].swap(tmp);
    return i;
  };
  for (int burn = 0; burn < 64; ++burn) step();

  std::vector<Mat> out;
  out.reserve(count);
  for (size_t c = 0; c < count; ++c) {
    step();
    size_t i = step();
    out.push_back(Mat(spec.ctx, n, n, slots[i]));
  }
  return out;
}

bool policy_admits(const ScanPolicy& policy, uint64_t order, uint32_t field_char) {
  if (!policy.order_whitelist.empty()) return policy.order_whitelist.count(order) > 0;
  if (order == 1) return false;
  if (order == 2 && !policy.include_order_two) return false;
  if (!policy.include_char_divisible && order % field_char == 0) return false;
  if (policy.require_prime_power && !is_prime_power(BigInt(order))) return false;
  return true;
}

ScanReport scan_almost_cyclic(const GroupSpec& spec, const ScanPolicy& policy) {
  validate_group_spec(spec);
  ScanReport rep;
  uint32_t ch = spec.ctx->p();

  struct Agg {
    uint64_t count = 0;
    bool strict_true = false, strict_false = false;
    bool app_true = false, app_false = false;
    uint64_t witness = 0;
  };
  std::map<std::pair<uint64_t, std::string>, Agg> agg;

  auto feed = [&](const Mat& m, uint64_t order) {
    if (!policy_admits(policy, order, ch)) return;
    ++rep.surveyed;
    Verdict strict = is_almost_cyclic(m, Mode::Strict);
    Verdict app = is_almost_cyclic(m, Mode::Appendix);
    Poly cp = charpoly(m);
    auto key = std::make_pair(order, cp.to_string());
    auto it = agg.find(key);
    if (it == agg.end()) {
      Agg a;
      a.witness = packed_hash(pack_mat(m));
      it = agg.emplace(key, a).first;
    }
    Agg& a = it->second;
    ++a.count;
    (strict.almost_cyclic ? a.strict_true : a.strict_false) = true;
    (app.almost_cyclic ? a.app_true : a.app_false) = true;
  };

  bool exhausted = false;
  try {
    ClosureResult closure = closure_enumerate(spec, policy.closure_cap);
    rep.exhaustive = true;
    rep.group_order = closure.order;
    for (size_t i = 0; i < closure.elements.size(); ++i) {
      uint64_t o = closure.element_orders[i];
      if (!policy_admits(policy, o, ch)) continue;
      feed(unpack_mat(spec.ctx, spec.dim, closure.elements[i]), o);
    }
    exhausted = true;
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
  }
  if (!exhausted) {
    rep.exhaustive = false;
    for (const Mat& m : random_elements(spec, policy.samples, policy.seed)) {
      auto o = element_order(m);
      if (!o) continue;
      feed(m, *o);
    }
  }

  for (auto& [key, a] : agg) {
    FingerprintRow row;
    row.order = key.first;
    row.charpoly = key.second;
    row.count = a.count;
    row.strict = a.strict_true && a.strict_false ? TriState::Inconsistent
                 : a.strict_true                 ? TriState::True
                                                 : TriState::False;
    row.appendix = a.app_true && a.app_false ? TriState::Inconsistent
                   : a.app_true              ? TriState::True
                                             : TriState::False;
    row.witness_hash = a.witness;
    rep.rows.push_back(row);
  }
  return rep;
}

GroupSpec gl_group(unsigned n, const Field& ctx) {
  GroupSpec spec;
  spec.ctx = ctx;
  spec.dim = n;
  spec.name = "GL" + std::to_string(n) + "(" + std::to_string(ctx->q()) + ")";
  Mat diag = Mat::identity(ctx, n);
  diag.at(0, 0) = ctx->generator();
  spec.gens.push_back(diag);
  if (n >= 2) {
    Mat cyc(ctx, n, n);
    for (unsigned i = 0; i + 1 < n; ++i) cyc.at(i + 1, i) = 1;
    cyc.at(0, n - 1) = 1;
    spec.gens.push_back(cyc);
    Mat swp = Mat::identity(ctx, n);
    swp.at(0, 0) = swp.at(1, 1) = 0;
    swp.at(0, 1) = swp.at(1, 0) = 1;
    spec.gens.push_back(swp);
    Mat trans = Mat::identity(ctx, n);
    trans.at(0, 1) = 1;
    spec.gens.push_back(trans);
  }
  return spec;
}

BigInt gl_order(unsigned n, const BigInt& q) {
  BigInt qn = big_pow(q, n);
  BigInt o = 1, qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    o *= qn - qi;
    qi *= q;
  }
  return o;
}

uint64_t eta_oracle(unsigned n, const BigInt& q, const BigInt& p, uint64_t cap) {
  if (gl_order(n, q) > cap)
    fail(Errc::CapExceeded, "|GL_" + std::to_string(n) + "(q)| exceeds cap");

  static std::mutex mu;
  static std::map<std::pair<unsigned, uint64_t>, std::map<uint64_t, uint64_t>> cache;
  uint64_t qv = (uint64_t)q;
  std::map<uint64_t, uint64_t> hist;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({n, qv});
    if (it != cache.end()) hist = it->second;
  }
  if (hist.empty()) {
    auto [r, a] = prime_power_decompose(q);
    Field ctx = field_create((uint32_t)(uint64_t)r, a);
    ClosureResult closure = closure_enumerate(gl_group(n, ctx), cap);
    if (BigInt(closure.order) != gl_order(n, q))
      fail(Errc::OutOfDomain, "GL closure order mismatch (internal)");
    hist = closure.order_histogram;
    std::lock_guard<std::mutex> lk(mu);
    cache[{n, qv}] = hist;
  }
  uint64_t best = 1;
  for (const auto& [order, cnt] : hist) {
    (void)cnt;
    BigInt o = order;
    while (o % p == 0) o /= p;
    if (o == 1 && order > best) best = order;
  }
  return best;
}

}  // namespace accyc
