#include "accyc/numth.hpp"

#include <algorithm>

namespace accyc {

PPow vp(const BigInt& m, const BigInt& p) {
  if (m < 1) fail(Errc::OutOfDomain, "vp needs m >= 1");
  if (p < 2 || !is_prime(p)) fail(Errc::NotPrime, "vp needs a prime p");
  PPow r{p, 0, 1};
  BigInt t = m;
  while (t % p == 0) {
    t /= p;
    ++r.m;
    r.value *= p;
  }
  return r;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (BigInt d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<BigInt, unsigned> prime_power_decompose(const BigInt& q) {
  if (q < 2) fail(Errc::OutOfDomain, "not a prime power");
  BigInt t = q;
  BigInt r = 0;
  for (BigInt d = 2; d * d <= t; ++d)
    if (t % d == 0) {
      r = d;
      break;
    }
  if (r == 0) return {q, 1};  // q itself prime
  unsigned a = 0;
  while (t % r == 0) {
    t /= r;
    ++a;
  }
  if (t != 1) fail(Errc::OutOfDomain, "not a prime power");
  return {r, a};
}

bool is_prime_power(const BigInt& n) {
  if (n < 2) return false;
  try {
    prime_power_decompose(n);
    return true;
  } catch (const Error&) {
    return false;
  }
}

unsigned e_p(const BigInt& q, const BigInt& p) {
  if (!is_prime(p)) fail(Errc::NotPrime, "e_p needs a prime p");
  if (q % p == 0) fail(Errc::NotCoprime, "e_p needs gcd(p, q) = 1");
  if (p == 2) return (q - 1) % 4 == 0 ? 1u : 2u;
  BigInt pw = 1;
  for (unsigned i = 1;; ++i) {
    pw = pw * q % p;
    if (pw == 1) return i;
  }
}

BigInt eta_gl(const BigInt& p, unsigned n, const BigInt& q) {
  if (q % p == 0) fail(Errc::NotCoprime, "eta_gl needs gcd(p, q) = 1");
  unsigned e = e_p(q, p);
  if (e > n) return 1;
  unsigned l = 0;
  BigInt pl = 1;
  while (pl * p * e <= n) {
    pl *= p;
    ++l;
  }
  BigInt eta = pl * vp(big_pow(q, e) - 1, p).value;
  if (p == 2) {
    // q odd, 2^t <= n < 2^{t+1}: eta_2 = 2^t |q -+ 1|_2 depending on q mod 4
    BigInt twot = 1;
    while (twot * 2 <= n) twot *= 2;
    BigInt alt = (q - 1) % 4 == 0 ? twot * vp(q - 1, 2).value : twot * vp(q + 1, 2).value;
    if (alt != eta) fail(Errc::OutOfDomain, "eta_2 cross-check failed (internal)");
  }
  return eta;
}

EtaFieldAutResult eta_with_field_auts(const BigInt& p,
                                      const std::function<BigInt(const BigInt&)>& base_exponent,
                                      const BigInt& q0, unsigned k) {
  if (!is_prime(p)) fail(Errc::NotPrime, "eta_with_field_auts needs a prime p");
  if (k == 0) fail(Errc::TowerMismatch, "tower height k must be positive");
  EtaFieldAutResult r{};
  // towers[i] = q0^{p^i}
  std::vector<BigInt> towers{q0};
  for (unsigned i = 1; i <= k; ++i) {
    BigInt acc = 1;
    for (BigInt c = 0; c < p; ++c) acc *= towers.back();
    towers.push_back(acc);
  }
  BigInt best = 0;
  for (unsigned i = 0; i <= k; ++i) {
    BigInt factor = 1;
    for (unsigned j = 0; j < k - i; ++j) factor *= p;
    BigInt cand = factor * base_exponent(towers[i]);
    if (cand > best) best = cand;
  }
  r.eta = best;
  r.collapse_pk_times = (q0 % p == 0);
  r.collapse_equal = (q0 % p != 0);
  r.collapse_p2_linear = (p == 2 && q0 % 2 != 0);
  return r;
}

BigInt eta_psl_reduced(const BigInt& p, unsigned n, const BigInt& q) {
  if (p == 2 || !is_prime(p)) fail(Errc::OutOfDomain, "reduction needs an odd prime");
  if (n % (unsigned)(uint64_t)p != 0 || (q - 1) % p != 0)
    fail(Errc::OutOfDomain, "needs p | n and p | q - 1");
  unsigned np = n / (unsigned)(uint64_t)p;
  if (np == 0) fail(Errc::OutOfDomain, "n/p must be positive");
  return eta_gl(p, np, q);
}

OrderCap mu_classical(ClassicalFamily family, unsigned n, const BigInt& q) {
  if (!is_prime_power(q)) fail(Errc::OutOfDomain, "q must be a prime power");
  switch (family) {
    case ClassicalFamily::PSL: {
      if (n < 2) fail(Errc::OutOfDomain, "PSL needs n >= 2");
      return {"PSL", BigRat(big_pow(q, n) - 1, q - 1), "singer"};
    }
    case ClassicalFamily::PSU: {
      if (n < 3) fail(Errc::OutOfDomain, "PSU needs n >= 3");
      if (n % 2 == 1) {
        if (is_prime(q)) return {"PSU", BigRat(big_pow(q, n - 1) + q), "odd-n-prime-q"};
        return {"PSU", BigRat(big_pow(q, n - 1) - 1), "odd-n"};
      }
      if (q > 2) return {"PSU", BigRat(big_pow(q, n - 1) + 1), "even-n"};
      return {"PSU", BigRat(4 * (big_pow(BigInt(2), n - 3) + 1)), "even-n-q2"};
    }
    case ClassicalFamily::PSp: {
      if (n < 2) fail(Errc::OutOfDomain, "PSp needs n >= 2 (half-rank)");
      return {"PSp", BigRat(big_pow(q, n + 1), q - 1), "conformal"};
    }
  }
  fail(Errc::OutOfDomain, "unknown family");
}

namespace {
// q = b^{2e+1}, e >= 1; returns e or fails
unsigned odd_power_exponent(const BigInt& q, unsigned base) {
  auto [r, a] = prime_power_decompose(q);
  if (r != base || a % 2 == 0 || a < 3)
    fail(Errc::OutOfDomain, "q must be an odd power b^{2e+1} with e >= 1");
  return (a - 1) / 2;
}
}  // namespace

OrderCap order_cap_exceptional(const std::string& family, const BigInt& q) {
  if (family == "2B2") {
    unsigned e = odd_power_exponent(q, 2);
    BigInt cap = BigInt(2 * e + 1) * (q + big_pow(BigInt(2), e + 1) + 1);
    return {"2B2", BigRat(cap), "order-cap-table"};
  }
  if (family == "G2") {
    auto [r, a] = prime_power_decompose(q);
    BigInt body = q * q + q + 1;
    BigInt cap = (r == 3 ? BigInt(2 * a) : BigInt(a)) * body;
    return {"G2", BigRat(cap), "order-cap-table"};
  }
  if (family == "2G2") {
    unsigned e = odd_power_exponent(q, 3);
    BigInt cap = BigInt(2 * e + 1) * (q + big_pow(BigInt(3), e + 1) + 1);
    return {"2G2", BigRat(cap), "order-cap-table"};
  }
  if (family == "3D4") {
    auto [r, a] = prime_power_decompose(q);
    (void)r;
    BigInt cap = BigInt(3 * a) * (big_pow(q, 3) - 1) * (q + 1);
    return {"3D4", BigRat(cap), "order-cap-table"};
  }
  if (family == "F4") {
    if (!is_prime_power(q)) fail(Errc::OutOfDomain, "q must be a prime power");
    return {"F4", BigRat(q * (big_pow(q, 3) - 1) * (q + 1)), "order-cap-table"};
  }
  if (family == "2F4") {
    unsigned e = odd_power_exponent(q, 2);
    BigInt cap = BigInt(2 * e + 1) * (q * q + big_pow(BigInt(2), 3 * e + 2) + q +
                                      big_pow(BigInt(2), e + 1) + 1);
    return {"2F4", BigRat(cap), "order-cap-table"};
  }
  if (family == "E6") {
    if (!is_prime_power(q)) fail(Errc::OutOfDomain, "q must be a prime power");
    return {"E6", BigRat(q * q * (big_pow(q, 3) + 1) * (q * q + q + 1)), "order-cap-table"};
  }
  if (family == "2E6") {
    if (!is_prime_power(q)) fail(Errc::OutOfDomain, "q must be a prime power");
    return {"2E6", BigRat(q * (q + 1) * (q * q + 1) * (big_pow(q, 3) - 1)), "order-cap-table"};
  }
  if (family == "E7") {
    if (!is_prime_power(q)) fail(Errc::OutOfDomain, "q must be a prime power");
    return {"E7", BigRat(q * (q + 1) * (q * q + 1) * (big_pow(q, 4) + 1)), "order-cap-table"};
  }
  if (family == "E8") {
    if (!is_prime_power(q)) fail(Errc::OutOfDomain, "q must be a prime power");
    return {"E8", BigRat(q * (q + 1) * (q * q + q + 1) * (big_pow(q, 5) - 1)), "order-cap-table"};
  }
  fail(Errc::OutOfDomain, "unknown exceptional family: " + family);
}

}  // namespace accyc
