#pragma once

#include <random>
#include <vector>

#include "accyc/matgf.hpp"
#include "accyc/poly.hpp"

// Test-only oracles, kept independent of the implementation paths they check.

namespace testsupport {

using namespace accyc;

inline std::vector<uint32_t> prime_powers_upto(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t x = 2; x <= n; ++x) {
    uint32_t t = x, r = 0;
    for (uint32_t d = 2; d * d <= t; ++d)
      if (t % d == 0) {
        r = d;
        break;
      }
    if (r == 0) {
      out.push_back(x);
      continue;
    }
    while (t % r == 0) t /= r;
    if (t == 1) out.push_back(x);
  }
  return out;
}

inline std::pair<uint32_t, uint32_t> split_prime_power(uint32_t q) {
  for (uint32_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      uint32_t k = 0, t = q;
      while (t % d == 0) {
        t /= d;
        ++k;
      }
      return {d, k};
    }
  return {q, 1};
}

inline Mat random_mat(const Field& F, size_t n, std::mt19937_64& rng) {
  std::vector<uint32_t> e(n * n);
  for (auto& x : e) x = (uint32_t)(rng() % F->q());
  return Mat(F, n, n, e);
}

inline Mat random_invertible(const Field& F, size_t n, std::mt19937_64& rng) {
  for (;;) {
    Mat m = random_mat(F, n, rng);
    if (mat_invertible(m)) return m;
  }
}

inline Poly random_monic(const Field& F, int deg, std::mt19937_64& rng) {
  std::vector<uint32_t> c(deg + 1);
  for (int i = 0; i < deg; ++i) c[i] = (uint32_t)(rng() % F->q());
  c[deg] = 1;
  return Poly(F, c);
}

// determinant of a polynomial matrix by cofactor expansion: the independent
// charpoly oracle (exponential, for small n only)
inline Poly polymat_det(const Field& F, const std::vector<Poly>& m, size_t n) {
  if (n == 0) return Poly::one(F);
  if (n == 1) return m[0];
  Poly det = Poly::zero(F);
  for (size_t j = 0; j < n; ++j) {
    if (m[j].is_zero()) continue;
    std::vector<Poly> minor;
    minor.reserve((n - 1) * (n - 1));
    for (size_t r = 1; r < n; ++r)
      for (size_t c = 0; c < n; ++c)
        if (c != j) minor.push_back(m[r * n + c]);
    Poly term = m[j] * polymat_det(F, minor, n - 1);
    if (j % 2 == 0)
      det = det + term;
    else
      det = det - term;
  }
  return det;
}

inline Poly charpoly_oracle(const Mat& a) {
  const Field& F = a.ctx();
  size_t n = a.rows();
  std::vector<Poly> m;
  m.reserve(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j)
        m.push_back(Poly(F, {F->neg(a.at(i, j)), 1}));
      else
        m.push_back(a.at(i, j) ? Poly::constant(F, F->neg(a.at(i, j))) : Poly::zero(F));
    }
  return polymat_det(F, m, n);
}

// all monic polynomials of degree exactly d
inline std::vector<Poly> all_monic(const Field& F, int d) {
  std::vector<Poly> out;
  uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= F->q();
  for (uint64_t code = 0; code < count; ++code) {
    std::vector<uint32_t> c(d + 1);
    uint64_t t = code;
    for (int i = 0; i < d; ++i) {
      c[i] = (uint32_t)(t % F->q());
      t /= F->q();
    }
    c[d] = 1;
    out.push_back(Poly(F, c));
  }
  return out;
}

// brute-force common-divisor set via trial division over all monic
// polynomials of degree <= max(deg f, deg g)
inline std::vector<Poly> common_divisors_bruteforce(const Poly& f, const Poly& g) {
  const Field& F = f.ctx();
  int dmax = std::max(f.degree().value_or(0), g.degree().value_or(0));
  std::vector<Poly> out;
  for (int d = 0; d <= dmax; ++d)
    for (const Poly& cand : all_monic(F, d))
      if (poly_divides(cand, f) && poly_divides(cand, g)) out.push_back(cand);
  return out;
}

// order by repeated multiplication, written independently of element_order
inline uint64_t order_bruteforce(const Mat& a, uint64_t cap = 1000000) {
  Mat cur = a;
  for (uint64_t k = 1; k <= cap; ++k) {
    if (mat_is_identity(cur)) return k;
    cur = mat_mul(cur, a);
  }
  return 0;
}

// enumerate all n x n matrices over GF(q) by encoding counter
template <typename Fn>
inline void for_all_matrices(const Field& F, size_t n, Fn&& fn) {
  uint64_t total = 1;
  for (size_t i = 0; i < n * n; ++i) total *= F->q();
  std::vector<uint32_t> e(n * n);
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t t = code;
    for (size_t i = 0; i < n * n; ++i) {
      e[i] = (uint32_t)(t % F->q());
      t /= F->q();
    }
    fn(Mat(F, n, n, e));
  }
}

}  // namespace testsupport
