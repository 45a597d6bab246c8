#pragma once

#include <functional>
#include <string>
#include <vector>

#include "accyc/bigint.hpp"
#include "accyc/errors.hpp"

namespace accyc {

/// A prime power p^m.
struct PPow {
  BigInt p;
  unsigned m;
  BigInt value;
};

/// Largest power of p dividing m (the p-part |m|_p).
PPow vp(const BigInt& m, const BigInt& p);

bool is_prime(const BigInt& n);
bool is_prime_power(const BigInt& n);
/// q = r^a with r prime; OutOfDomain if q is not a prime power.
std::pair<BigInt, unsigned> prime_power_decompose(const BigInt& q);

/// e_p(q): least i > 0 with p | q^i - 1 for p > 2; for p = 2, 1 if 4 | (q-1)
/// and 2 if 4 | (q+1). NotCoprime if p | q.
unsigned e_p(const BigInt& q, const BigInt& p);

/// Exponent of a Sylow p-subgroup of GL_n(q) for p coprime to q:
/// p^l * |q^e - 1|_p with l maximal such that p^l e <= n, and 1 when
/// e_p(q) > n. For p = 2 the two published forms of the formula are
/// cross-checked against each other.
BigInt eta_gl(const BigInt& p, unsigned n, const BigInt& q);

struct EtaFieldAutResult {
  BigInt eta;              // max_i p^{k-i} eta_p(G(q0^{p^i}))
  bool collapse_pk_times;  // p | q0: eta = p^k * eta_p(G(q0))
  bool collapse_equal;     // p coprime to q0: eta = eta_p(G(q))
  bool collapse_p2_linear; // p = 2, q odd (linear-family collapse applies)
};

/// Sylow exponent of G(q) extended by its field automorphisms of order p^k,
/// where q = q0^{p^k}: the exact max formula, with flags reporting when the
/// published collapses apply. base_exponent computes eta_p(G(.)) for the family.
EtaFieldAutResult eta_with_field_auts(const BigInt& p,
                                      const std::function<BigInt(const BigInt&)>& base_exponent,
                                      const BigInt& q0, unsigned k);

/// Sylow exponent of PSL_n(q) in the reduced case p | gcd(n, q-1), p odd:
/// equals eta_p(GL_{n/p}(q)) because such groups have no irreducible p-element.
BigInt eta_psl_reduced(const BigInt& p, unsigned n, const BigInt& q);

/// Element-order cap, exact (rational caps are never floored).
struct OrderCap {
  std::string family;
  BigRat cap;
  std::string citation;
};

enum class ClassicalFamily { PSL, PSU, PSp };

/// Piecewise upper bound mu(L) for element orders in Aut L:
///   PSL_n(q): (q^n-1)/(q-1)
///   PSU_n(q), n odd: q^{n-1}-1 (q not prime) or q^{n-1}+q (q prime)
///   PSU_n(q), n even: q^{n-1}+1 (q > 2) or 4(2^{n-3}+1) (q = 2)
///   PSp_2n(q): q^{n+1}/(q-1)
OrderCap mu_classical(ClassicalFamily family, unsigned n, const BigInt& q);

/// Element-order cap for the automorphism group of an exceptional group,
/// one closed form per family; q must have the family's shape.
/// Families: 2B2, G2, 2G2, 3D4, F4, 2F4, E6, 2E6, E7, E8.
OrderCap order_cap_exceptional(const std::string& family, const BigInt& q);

}  // namespace accyc
