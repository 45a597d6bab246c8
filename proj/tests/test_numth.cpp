#include <doctest.h>

#include "accyc/groupscan.hpp"
#include "accyc/numth.hpp"
#include "support.hpp"

using namespace accyc;
using namespace testsupport;

namespace {

// SL2(q): upper and lower transvections over a GF(p)-basis generate the two
// full root subgroups, hence the whole group
GroupSpec sl2_group(const Field& F) {
  GroupSpec spec;
  spec.ctx = F;
  spec.dim = 2;
  spec.name = "SL2(" + std::to_string(F->q()) + ")";
  uint32_t basis = 1;
  for (uint32_t i = 0; i < F->k(); ++i) {
    spec.gens.push_back(Mat(F, 2, 2, {1, basis, 0, 1}));
    spec.gens.push_back(Mat(F, 2, 2, {1, 0, basis, 1}));
    basis *= F->p();
  }
  return spec;
}

uint64_t max_p_power_order(const std::map<uint64_t, uint64_t>& hist, uint64_t p) {
  uint64_t best = 1;
  for (const auto& [o, n] : hist) {
    (void)n;
    uint64_t t = o;
    while (t % p == 0) t /= p;
    if (t == 1 && o > best) best = o;
  }
  return best;
}

}  // namespace

TEST_CASE("p-part and e_p examples") {
  CHECK(vp(48, 2).value == 16);
  CHECK(vp(72, 3).value == 9);
  CHECK(vp(7, 2).value == 1);
  CHECK(e_p(2, 3) == 2);
  CHECK(e_p(7, 2) == 2);  // 4 | 8
  CHECK(e_p(7, 5) == 4);
  CHECK(e_p(5, 2) == 1);  // 4 | 4
  try {
    e_p(9, 3);
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCoprime);
  }
}

TEST_CASE("eta_gl examples, cross-checked by enumeration") {
  CHECK(eta_gl(2, 2, 3) == 8);
  CHECK(eta_oracle(2, 3, 2) == 8);
  CHECK(eta_gl(3, 2, 2) == 3);
  CHECK(eta_oracle(2, 2, 3) == 3);
  CHECK(eta_gl(3, 3, 4) == 9);
  CHECK(eta_oracle(3, 4, 3) == 9);
  CHECK(eta_gl(2, 2, 5) == 8);
  CHECK(eta_oracle(2, 5, 2) == 8);
  CHECK(eta_gl(5, 2, 3) == 1);  // 5 does not divide |GL_2(3)|
  try {
    eta_gl(3, 2, 9);
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCoprime);
  }
}

TEST_CASE("field-automorphism exponent: the S5 check") {
  // SL2(4) inside GL4(2) through the regular representation of GF(4), plus
  // the Frobenius block: the extension is Sigma-L2(4), isomorphic to S5.
  Field f2 = field_create(2, 1);
  Field f4 = field_create(2, 2);
  auto blk = [&](uint32_t e) {
    // multiplication-by-e map of GF(4) in the basis (1, x)
    std::vector<uint32_t> col0 = {f4->mul(e, 1) & 1u, (f4->mul(e, 1) >> 1) & 1u};
    std::vector<uint32_t> col1 = {f4->mul(e, 2) & 1u, (f4->mul(e, 2) >> 1) & 1u};
    return std::vector<uint32_t>{col0[0], col1[0], col0[1], col1[1]};
  };
  auto embed = [&](const Mat& m) {
    Mat big(f2, 4, 4);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) {
        auto b = blk(m.at(i, j));
        for (size_t r = 0; r < 2; ++r)
          for (size_t c = 0; c < 2; ++c) big.at(2 * i + r, 2 * j + c) = b[r * 2 + c];
      }
    return big;
  };
  GroupSpec sl24 = sl2_group(f4);
  GroupSpec sigma;
  sigma.ctx = f2;
  sigma.dim = 4;
  for (const Mat& g : sl24.gens) sigma.gens.push_back(embed(g));
  Mat frob(f2, 4, 4, {1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1});
  sigma.gens.push_back(frob);
  ClosureResult c = closure_enumerate(sigma, 1000);
  CHECK(c.order == 120);
  CHECK(max_p_power_order(c.order_histogram, 2) == 4);

  // the max formula reproduces the enumerated exponent
  auto base = [&](const BigInt& q) -> BigInt {
    Field F = field_create(2, q == 2 ? 1 : 2);
    return BigInt(max_p_power_order(closure_enumerate(sl2_group(F), 1000).order_histogram, 2));
  };
  EtaFieldAutResult r = eta_with_field_auts(2, base, 2, 1);
  CHECK(r.eta == 4);
  CHECK(r.collapse_pk_times);  // p = 2 divides q0 = 2
}

TEST_CASE("field-automorphism exponent: coprime collapse via SL2(8)") {
  Field f8 = field_create(2, 3);
  ClosureResult c = closure_enumerate(sl2_group(f8), 1000);
  CHECK(c.order == 504);
  CHECK(max_p_power_order(c.order_histogram, 3) == 9);

  Field f2 = field_create(2, 1);
  auto base = [&](const BigInt& q) -> BigInt {
    Field F = field_create(2, q == 2 ? 1 : 3);
    return BigInt(max_p_power_order(closure_enumerate(sl2_group(F), 1000).order_histogram, 3));
  };
  EtaFieldAutResult r = eta_with_field_auts(3, base, 2, 1);
  CHECK(r.eta == 9);  // collapses to eta_3(SL2(8))
  CHECK(r.collapse_equal);
  (void)f2;
}

TEST_CASE("field-automorphism exponent: defining-characteristic multiplication") {
  // unipotent exponent of SL2 in characteristic 3 is 3 at every tower level
  auto base = [](const BigInt&) -> BigInt { return 3; };
  EtaFieldAutResult r = eta_with_field_auts(3, base, 3, 1);
  CHECK(r.eta == 9);  // exactly p^k * eta(G)
  CHECK(r.collapse_pk_times);
}

TEST_CASE("PSL Sylow-exponent reduction") {
  CHECK(eta_psl_reduced(3, 3, 4) == eta_gl(3, 1, 4));
  CHECK(eta_psl_reduced(3, 3, 4) == 3);
  try {
    eta_psl_reduced(3, 4, 4);
    FAIL("expected OutOfDomain");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfDomain);
  }
}

TEST_CASE("classical order caps") {
  CHECK(mu_classical(ClassicalFamily::PSL, 3, 2).cap == BigRat(7));
  CHECK(mu_classical(ClassicalFamily::PSU, 4, 2).cap == BigRat(12));  // 4(2+1)
  CHECK(mu_classical(ClassicalFamily::PSp, 2, 3).cap == BigRat(27, 2));
  CHECK(mu_classical(ClassicalFamily::PSU, 5, 2).cap == BigRat(18));  // odd n, prime q
  CHECK(mu_classical(ClassicalFamily::PSU, 5, 4).cap == BigRat(255)); // odd n, q not prime
  try {
    mu_classical(ClassicalFamily::PSU, 2, 3);
    FAIL("expected OutOfDomain");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfDomain);
  }
}

TEST_CASE("the PSL cap is attained on GL3(2)") {
  // max element order in GL3(2) is 7, by enumeration
  Field f2 = field_create(2, 1);
  ClosureResult c = closure_enumerate(gl_group(3, f2), 1000);
  CHECK(c.order == 168);
  CHECK(c.order_histogram.rbegin()->first == 7);
  CHECK(mu_classical(ClassicalFamily::PSL, 3, 2).cap == BigRat(7));
}

TEST_CASE("exceptional order caps from the closed forms") {
  CHECK(order_cap_exceptional("2B2", 8).cap == BigRat(39));
  CHECK(order_cap_exceptional("G2", 3).cap == BigRat(26));
  CHECK(order_cap_exceptional("G2", 4).cap == BigRat(42));
  CHECK(order_cap_exceptional("3D4", 2).cap == BigRat(63));
  CHECK(order_cap_exceptional("2G2", 27).cap == BigRat(3 * (27 + 9 + 1)));
  CHECK(order_cap_exceptional("F4", 2).cap == BigRat(2 * 7 * 3));
  CHECK(order_cap_exceptional("2F4", 8).cap ==
        BigRat(3 * (64 + 32 + 8 + 4 + 1)));
  CHECK(order_cap_exceptional("E6", 2).cap == BigRat(4 * 9 * 7));
  CHECK(order_cap_exceptional("2E6", 2).cap == BigRat(2 * 3 * 5 * 7));
  CHECK(order_cap_exceptional("E7", 2).cap == BigRat(2 * 3 * 5 * 17));
  CHECK(order_cap_exceptional("E8", 2).cap == BigRat(2 * 3 * 7 * 31));
  for (const char* fam : {"2B2", "2G2", "2F4"}) {
    try {
      order_cap_exceptional(fam, 4);
      FAIL("expected OutOfDomain");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::OutOfDomain);
    }
  }
}

TEST_CASE("e_p is stable along p-power towers (odd p)") {
  for (uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (uint32_t q : prime_powers_upto(64)) {
      if (q % p == 0) continue;
      unsigned e = e_p(q, p);
      for (unsigned k = 1; k <= 3; ++k) {
        BigInt qk = big_pow(q, (unsigned long)(uint64_t)big_pow(p, k));
        CHECK(e_p(qk, p) == e);
      }
    }
  }
}

TEST_CASE("p-part growth along towers when p | q - 1 (or 4 | q - 1)") {
  for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (uint32_t q : prime_powers_upto(64)) {
      if (q % p == 0) continue;
      bool hyp = p == 2 ? (q - 1) % 4 == 0 : (q - 1) % p == 0;
      if (!hyp) continue;
      for (unsigned k = 1; k <= 3; ++k) {
        BigInt qk = big_pow(q, (unsigned long)(uint64_t)big_pow(p, k));
        CHECK(vp(qk - 1, p).value == big_pow(p, k) * vp(BigInt(q) - 1, p).value);
      }
    }
  }
}

TEST_CASE("squaring the field doubles the 2-exponent of GL_n") {
  for (uint32_t q0 : {3u, 5u, 7u, 9u}) {
    for (unsigned n = 2; n <= 6; ++n)
      CHECK(eta_gl(2, n, BigInt(q0) * q0) == 2 * eta_gl(2, n, q0));
  }
}

TEST_CASE("e bound: e > 1 implies e < (q^e - 1)/(q - 1)") {
  for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (uint32_t q : prime_powers_upto(64)) {
      if (q % p == 0) continue;
      unsigned e = e_p(q, p);
      if (e > 1) CHECK(BigInt(e) * (q - 1) < big_pow(q, e) - 1);
    }
  }
}
