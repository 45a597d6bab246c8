#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "accyc/bigint.hpp"
#include "accyc/numth.hpp"

namespace accyc {

/// Worst-case mode sets kappa = 1 wherever the kappa twist appears; explicit
/// mode evaluates kappa from a concrete cross characteristic ell.
struct EllMode {
  bool worst_case = true;
  BigInt ell = 0;
};

/// Representation-dimension lower bound, exact evaluation of one published
/// formula with its printed exceptional (n, q) overrides taking precedence.
/// Formula ids: md6.1 .. md6.8, gmst2.A, gmst2.B1, gmst2.B2, gmst2.B3,
/// gmst2.C, speven.dim, ufloor.dim, suzuki.dim. OutOfDomain outside each bound's stated
/// hypotheses.
BigInt dim_lower(const std::string& formula_id, unsigned n, const BigInt& q,
                 const EllMode& ell = {});

/// Same evaluation kept as an exact rational (ufloor.dim is not integral for
/// even n); the screening engine compares these without rounding.
BigRat dim_value(const std::string& formula_id, unsigned n, const BigInt& q,
                 const EllMode& ell = {});

/// Least-number-of-conjugates upper bound for one family / element descriptor.
/// Descriptors: generic, worst, transvection, graph-involution, field-auto-2,
/// diag-auto-2, inner-involution, odd-order, 2element, regular-semisimple.
/// UnknownDescriptor when the pair is not covered by a cited result.
int alpha_upper(const std::string& family, unsigned n, const BigInt& q,
                const std::string& descriptor);

// ---------------------------------------------------------------------------
// rule registry: the screening inequalities are data, not code

struct VarSpec {
  enum class Kind { Int, PrimePower, OddPrimePower, EvenPrimePower, OddPrime };
  std::string name;
  Kind kind;
  long lo = 0, hi = 0;
};

struct GridSpec {
  std::vector<VarSpec> vars;
};

struct Rule {
  std::string id;
  std::string family;
  std::map<std::string, long> consts;
  GridSpec grid;
  std::vector<GridSpec> windows;  // every window point must fail
  std::set<std::vector<long>> exclude;
  bool require_coprime_p_q0 = false;
  std::string derive;  // "", "q=q0^(p^m)", "q=q0^(2^m)", "q=2^(2e+1)"
  std::string dim_id;
  std::string alpha;   // descriptor resolved through alpha_upper
  std::string cap_id;
  bool rel_lt = false; // survivor iff LHS < RHS instead of <=
  int cap_loss = 1;    // RHS = alpha * (cap - cap_loss)
  std::set<std::vector<long>> expect;
  std::string cite;
};

/// Line-oriented registry text: one stanza per rule separated by blank lines,
/// keys: rule/family/const/grid/exclude/require/derive/window/dim/alpha/cap/
/// rel/caploss/expect/cite. '#' starts a comment.
std::vector<Rule> parse_registry(const std::string& text);
std::string format_registry(const std::vector<Rule>& rules);

struct Certificate {
  std::vector<long> point;  // grid variable values in declared order
  BigRat lhs, rhs;
  bool survivor;
};

struct SurvivorReport {
  std::string rule_id;
  std::set<std::vector<long>> survivors;
  std::vector<Certificate> certificates;
  bool expect_checked = false;
  bool expect_matched = false;
  std::set<std::vector<long>> unexpected;  // computed but not expected
  std::set<std::vector<long>> missing;     // expected but not computed
  bool window_ok = true;
  std::set<std::vector<long>> window_violations;
  bool pass() const { return (!expect_checked || expect_matched) && window_ok; }
};

/// Exact sweep of one rule over its grid, expected-set comparison, and the
/// window check (all parameters immediately beyond the grid must fail).
SurvivorReport screen(const Rule& rule);

/// Sweep with an overridden grid: survivors and certificates only, no
/// expected-set or window checking.
SurvivorReport screen_with_grid(const Rule& rule, const GridSpec& grid);

struct FixtureIssue {
  std::string kind;    // "rule", "window", "elementary", "casebounds", "histogram", ...
  std::string item;
  std::string detail;
};

struct RulesVerifyResult {
  bool pass = true;
  size_t checked = 0;
  std::vector<FixtureIssue> issues;
  std::vector<std::string> warnings;
};

/// Every rule's computed survivor set must equal its expected set and its
/// window must be clean. An empty registry passes vacuously with a warning.
RulesVerifyResult verify_rules(const std::vector<Rule>& rules);

// ---------------------------------------------------------------------------
// elementary inequality suite

/// Violations of one of the four elementary inequalities over prime powers
/// q <= qmax, for the given n. Items:
///   1: (q^n-1)/(q-1) - 2 > c(n)(q-1), c = 4, 7, n for n = 3, 4, >= 5
///   2: q odd: (q^n-1)/2 > 2n(q-1) for n >= 3; (q^2-1)/2 > 6(q-1) for n = 2
///   3: n odd: (q^n-q)/(q+1) > n(q-1) for n >= 5; > 4(q-1) for n = 3
///   4: n even: (q^n-1)/(q+1) > n(q-1) for n >= 6; > 6(q-1) for n = 4
std::vector<BigInt> elementary_violations(int item, unsigned n, const BigInt& qmax);

/// The printed exception sets (empty when the inequality has none).
std::vector<BigInt> elementary_exceptions(int item, unsigned n);

struct ElemIneqCheck {
  int item;
  unsigned n;
  bool pass;
  std::vector<BigInt> computed, expected;
};

/// All shipped (item, n) pairs over q <= 64.
std::vector<ElemIneqCheck> elementary_verify_all();

// ---------------------------------------------------------------------------
// case-table consistency rows (|g| caps as stored constants)

struct CaseBoundRow {
  std::string family;  // dim-formula id for the cross-check
  unsigned n = 0;
  long q = 0;
  BigInt g_cap;
  int alpha_cap = 0;
  BigInt dim_bound;
};

/// TSV: family n q gcap alphacap dimbound (header line + comments allowed).
std::vector<CaseBoundRow> parse_case_bounds(const std::string& text);

struct CaseBoundCheck {
  bool pass = true;
  std::vector<FixtureIssue> issues;
  size_t rows = 0;
};

/// Each row must satisfy alpha * (gcap - 1) < dimbound, and the stored dim
/// bound must agree with the named formula.
CaseBoundCheck verify_case_bounds(const std::vector<CaseBoundRow>& rows);

}  // namespace accyc
