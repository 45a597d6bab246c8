#include <doctest.h>

#include "accyc/poly.hpp"
#include "support.hpp"

using namespace accyc;
using namespace testsupport;

TEST_CASE("gcd, derivative and divrem examples") {
  Field f2 = field_create(2, 1);
  Poly a(f2, {1, 0, 1});  // x^2+1 = (x+1)^2
  Poly b(f2, {1, 1});     // x+1
  CHECK(poly_gcd(a, b) == b);

  Field f3 = field_create(3, 1);
  Poly c(f3, {0, 1, 0, 1});  // x^3+x
  CHECK(poly_derivative(c) == Poly::one(f3));  // 3x^2 vanishes

  Field f7 = field_create(7, 1);
  Poly f(f7, {1, 0, 1});  // x^2+1
  Poly g(f7, {5, 1});     // x-2
  auto [q, r] = poly_divrem(f, g);
  CHECK(q == Poly(f7, {2, 1}));  // x+2
  CHECK(r == Poly::constant(f7, 5));
}

TEST_CASE("degree of zero is a distinguished marker") {
  Field f2 = field_create(2, 1);
  CHECK(!Poly::zero(f2).degree().has_value());
  CHECK(Poly::one(f2).degree() == 0);
}

TEST_CASE("divrem reconstruction f = q*g + r over all q <= 16") {
  std::mt19937_64 rng(11);
  for (uint32_t q : prime_powers_upto(16)) {
    auto [p, k] = split_prime_power(q);
    Field F = field_create(p, k);
    for (int t = 0; t < 1000; ++t) {
      Poly f = random_monic(F, 1 + (int)(rng() % 8), rng);
      Poly g = random_monic(F, 1 + (int)(rng() % 5), rng);
      auto [quot, rem] = poly_divrem(f, g);
      CHECK(quot * g + rem == f);
      if (!rem.is_zero()) CHECK(*rem.degree() < *g.degree());
    }
  }
}

TEST_CASE("gcd agrees with brute-force divisor enumeration for deg <= 4, q <= 4") {
  std::mt19937_64 rng(13);
  for (uint32_t q : {2u, 3u, 4u}) {
    auto [p, k] = split_prime_power(q);
    Field F = field_create(p, k);
    for (int t = 0; t < 60; ++t) {
      Poly f = random_monic(F, 1 + (int)(rng() % 4), rng);
      Poly g = random_monic(F, 1 + (int)(rng() % 4), rng);
      Poly d = poly_gcd(f, g);
      CHECK(poly_divides(d, f));
      CHECK(poly_divides(d, g));
      for (const Poly& c : common_divisors_bruteforce(f, g)) CHECK(poly_divides(c, d));
    }
  }
}

TEST_CASE("is_power_of_linear examples") {
  Field f2 = field_create(2, 1);
  auto r = is_power_of_linear(Poly(f2, {1, 0, 0, 0, 1}));  // x^4+1 = (x+1)^4
  REQUIRE(r.kind == PowerOfLinear::Kind::Power);
  CHECK(r.alpha == 1);
  CHECK(r.mult == 4);

  CHECK(is_power_of_linear(Poly(f2, {1, 1, 1})).kind == PowerOfLinear::Kind::None);

  Field f7 = field_create(7, 1);
  auto s = is_power_of_linear(Poly(f7, {6, 5, 1, 1}));  // (x-2)^3 = x^3+x^2+5x+6 mod 7
  REQUIRE(s.kind == PowerOfLinear::Kind::Power);
  CHECK(s.alpha == 2);
  CHECK(s.mult == 3);

  CHECK(is_power_of_linear(Poly::one(f2)).kind == PowerOfLinear::Kind::Constant);
  try {
    is_power_of_linear(Poly(f7, {1, 2}));
    FAIL("expected NotMonic");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMonic);
  }
}

TEST_CASE("is_power_of_linear matches exhaustive trial expansion, deg <= 6, q <= 9") {
  for (uint32_t q : prime_powers_upto(9)) {
    auto [p, k] = split_prime_power(q);
    Field F = field_create(p, k);
    for (int d = 1; d <= 6; ++d) {
      // expansion table: (x - a)^d for every a
      std::vector<Poly> table;
      for (uint32_t a = 0; a < q; ++a) table.push_back(Poly::linear(F, a).pow(d));
      for (const Poly& f : all_monic(F, d)) {
        int matches = 0;
        uint32_t root = 0;
        for (uint32_t a = 0; a < q; ++a)
          if (table[a] == f) {
            ++matches;
            root = a;
          }
        auto r = is_power_of_linear(f);
        if (matches == 1) {
          REQUIRE(r.kind == PowerOfLinear::Kind::Power);
          CHECK(r.alpha == root);
          CHECK(r.mult == d);
        } else {
          REQUIRE(matches == 0);  // distinct alpha give distinct expansions
          CHECK(r.kind == PowerOfLinear::Kind::None);
        }
      }
    }
  }
}

TEST_CASE("roots_in_field examples") {
  Field f5 = field_create(5, 1);
  auto r = roots_in_field(Poly(f5, {4, 0, 1}));  // x^2-1
  REQUIRE(r.size() == 2);
  CHECK(r[0] == std::pair<uint32_t, int>{1, 1});
  CHECK(r[1] == std::pair<uint32_t, int>{4, 1});

  Field f2 = field_create(2, 1);
  CHECK(roots_in_field(Poly(f2, {1, 1, 1})).empty());

  Field f3 = field_create(3, 1);
  auto s = roots_in_field(Poly(f3, {0, 0, 0, 1}));  // x^3
  REQUIRE(s.size() == 1);
  CHECK(s[0] == std::pair<uint32_t, int>{0, 3});

  try {
    roots_in_field(Poly::zero(f3));
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroPolynomial);
  }
}

TEST_CASE("squarefree test handles the characteristic-p caveat") {
  Field f3 = field_create(3, 1);
  CHECK(poly_is_squarefree(Poly(f3, {1, 1})));
  CHECK(!poly_is_squarefree(Poly(f3, {0, 0, 0, 1})));      // x^3 has zero derivative
  CHECK(!poly_is_squarefree(Poly(f3, {1, 0, 0, 1})));      // x^3+1 = (x+1)^3
  CHECK(poly_is_squarefree(Poly(f3, {1, 0, 0, 0, 1})));    // x^4+1, squarefree over GF(3)
}
