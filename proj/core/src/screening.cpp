#include "accyc/screening.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace accyc {

namespace {

BigInt bgcd(BigInt a, BigInt b) {
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// exact integer value of a rational expression; the printed bounds are
// integral on their domains
BigInt exact_int(const BigRat& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1)
    fail(Errc::OutOfDomain, std::string("non-integral value for ") + what);
  return boost::multiprecision::numerator(r);
}

unsigned suzuki_e(const BigInt& q) {
  auto [r, a] = prime_power_decompose(q);
  if (r != 2 || a % 2 == 0 || a < 3) fail(Errc::OutOfDomain, "q must be 2^{2e+1}, e >= 1");
  return (a - 1) / 2;
}

}  // namespace

BigRat dim_value(const std::string& id, unsigned n, const BigInt& q, const EllMode& ell) {
  auto pw = [&](unsigned e) { return big_pow(q, e); };

  if (id == "md6.1") {
    if (q < 4) fail(Errc::OutOfDomain, "md6.1 needs q >= 4");
    if (q == 4) return 2;
    if (q == 9) return 3;
    return exact_int(BigRat(q - 1, bgcd(2, q - 1)), "md6.1");
  }
  if (id == "md6.2") {
    if (n <= 2) fail(Errc::OutOfDomain, "md6.2 needs n > 2");
    if (n == 3 && q == 2) return 2;
    if (n == 3 && q == 4) return 4;
    if (n == 4 && q == 2) return 7;
    if (n == 4 && q == 3) return 26;
    return exact_int(BigRat(pw(n) - 1, q - 1), "md6.2") - 2;
  }
  if (id == "md6.3") {
    if (n <= 2) fail(Errc::OutOfDomain, "md6.3 needs n > 2");
    if (n == 4 && q == 2) return 4;
    if (n == 4 && q == 3) return 6;
    if (n % 2 == 1) return exact_int(BigRat(pw(n) - q, q + 1), "md6.3");
    return exact_int(BigRat(pw(n) - 1, q + 1), "md6.3");
  }
  if (id == "md6.4") {
    if (n <= 1 || q % 2 == 0) fail(Errc::OutOfDomain, "md6.4 needs n > 1 and q odd");
    return exact_int(BigRat(pw(n) - 1, 2), "md6.4");
  }
  if (id == "md6.5") {
    if (n <= 1 || q % 2 != 0) fail(Errc::OutOfDomain, "md6.5 needs n > 1 and q even");
    if (n == 4 && q == 2) fail(Errc::OutOfDomain, "md6.5 has no printed bound at (4,2)");
    if (n == 2 && q == 2) return 2;
    return exact_int(BigRat(q * (pw(n) - 1) * (pw(n - 1) - 1), 2 * (q + 1)), "md6.5");
  }
  if (id == "md6.6") {
    if (n <= 2 || q % 2 == 0) fail(Errc::OutOfDomain, "md6.6 needs n > 2 and q odd");
    if (n == 3 && q == 3) return 27;
    if (q == 3) return exact_int(BigRat((pw(n) - 1) * (pw(n) - 3), 8), "md6.6");
    return exact_int(BigRat(pw(2 * n) - 1, q * q - 1), "md6.6") - 2;
  }
  if (id == "md6.7") {
    if (n <= 3) fail(Errc::OutOfDomain, "md6.7 needs n > 3");
    if (n == 4 && q == 2) return 8;
    if (q < 4) return exact_int(BigRat((pw(n) - 1) * (pw(n - 1) - 1), q * q - 1), "md6.7");
    return exact_int(BigRat((pw(n) - 1) * (pw(n - 1) + q), q * q - 1), "md6.7") - 2;
  }
  if (id == "md6.8") {
    if (n <= 3) fail(Errc::OutOfDomain, "md6.8 needs n > 3");
    if (n == 4 && q == 2) return 32;
    if (n == 4 && q == 4) return 1026;
    if (n == 5 && q == 2) return 151;
    if (n == 5 && q == 3) return 2376;
    return exact_int(BigRat(q * (pw(n) + 1) * (pw(n - 2) - 1), q * q - 1), "md6.8") - 1;
  }
  if (id == "gmst2.A") {
    if (n < 3) fail(Errc::OutOfDomain, "gmst2.A needs n >= 3");
    if ((n == 3 && (q == 2 || q == 4)) || (n == 4 && q == 2))
      fail(Errc::OutOfDomain, "gmst2.A excludes (3,2), (3,4), (4,2)");
    if (n == 4 && q == 3) return 26;
    if (n == 6 && q == 2) return 61;
    if (n == 6 && q == 3) return 362;
    if (n == 3) return exact_int(BigRat((q - 1) * (q * q - 1), bgcd(3, q - 1)), "gmst2.A");
    if (n == 4) return exact_int(BigRat((q - 1) * (pw(3) - 1), bgcd(2, q - 1)), "gmst2.A");
    BigInt kappa = 1;
    if (!ell.worst_case) {
      BigInt body = exact_int(BigRat(pw(n - 2) - 1, q - 1), "kappa");
      kappa = (ell.ell > 0 && body % ell.ell == 0) ? 1 : 0;
    }
    BigInt inner = exact_int(BigRat(pw(n - 2) - q, q - 1), "gmst2.A") - kappa;
    return (pw(n - 1) - 1) * inner;
  }
  if (id == "gmst2.B1") {
    if (n < 5) fail(Errc::OutOfDomain, "gmst2.B1 needs n >= 5");
    if (n == 6 && q == 2) fail(Errc::OutOfDomain, "gmst2.B1 excludes (6,2)");
    if (n % 2 == 1)
      return exact_int(BigRat(pw(n - 2) * (q - 1) * (pw(n - 2) - q), q + 1), "gmst2.B1");
    return exact_int(BigRat(pw(n - 2) * (q - 1) * (pw(n - 2) - 1), q + 1), "gmst2.B1");
  }
  if (id == "gmst2.B2") {
    if (q <= 3) fail(Errc::OutOfDomain, "gmst2.B2 needs q > 3");
    BigInt body = (q * q + 1) * (q * q - q + 1);
    if (q % 2 == 1) return exact_int(BigRat(body - 2, 2), "gmst2.B2");
    return body - 1;
  }
  if (id == "gmst2.B3") {
    if (q < 5) fail(Errc::OutOfDomain, "gmst2.B3 needs q >= 5");
    if (bgcd(3, q + 1) == 3)
      return exact_int(BigRat((q - 1) * (q * q + 3 * q + 2), 6), "gmst2.B3");
    return exact_int(BigRat(2 * pw(3) - q * q + 2 * q - 3, 3), "gmst2.B3");
  }
  if (id == "gmst2.C") {
    if (n < 2) fail(Errc::OutOfDomain, "gmst2.C needs n >= 2");
    if (n == 3 && q == 2) fail(Errc::OutOfDomain, "gmst2.C excludes (6,2)");
    return exact_int(BigRat((pw(n) - 1) * (pw(n) - q), 2 * (q + 1)), "gmst2.C");
  }
  if (id == "speven.dim") {
    if (n < 2 || q % 2 != 0) fail(Errc::OutOfDomain, "speven.dim needs n >= 2 and q even");
    return exact_int(BigRat((pw(n) - 1) * (pw(n) - q), 2 * (q + 1)), "speven.dim");
  }
  if (id == "ufloor.dim") {
    if (n < 2) fail(Errc::OutOfDomain, "ufloor.dim needs n >= 2");
    return BigRat(pw(n) - q, q + 1);
  }
  if (id == "suzuki.dim") {
    unsigned e = suzuki_e(q);
    return BigRat(big_pow(BigInt(2), e) * (q - 1));
  }
  fail(Errc::OutOfDomain, "unknown dim formula: " + id);
}

BigInt dim_lower(const std::string& id, unsigned n, const BigInt& q, const EllMode& ell) {
  return exact_int(dim_value(id, n, q, ell), id.c_str());
}

int alpha_upper(const std::string& family, unsigned n, const BigInt& q,
                const std::string& d) {
  if (d == "regular-semisimple") return 3;
  auto unknown = [&]() -> int {
    fail(Errc::UnknownDescriptor, "no cited bound for " + family + " / " + d);
  };
  if (family == "psl2") {
    if (d == "generic") return 3;
    if (d == "odd-order") return q == 9 ? 3 : 2;
    if (d == "2element") return 2;
    if (d == "field-auto-2") return q == 9 ? 5 : 4;
    if (d == "diag-auto-2") return 4;
    return unknown();
  }
  if (family == "psl3") {
    if (d == "generic") return 3;
    if (d == "worst" || d == "graph-field-2") return 4;
    return unknown();
  }
  if (family == "psl4") {
    if (d == "generic") return 4;
    if (d == "worst" || d == "graph-involution") return q == 2 ? 7 : 6;
    return unknown();
  }
  if (family == "psln") {
    if (d == "generic" || d == "worst") return (int)n;
    return unknown();
  }
  if (family == "psu3") {
    if (d == "generic") return 3;
    if (d == "worst" || d == "inner-involution") return q == 3 ? 4 : 3;
    return unknown();
  }
  if (family == "psu4") {
    if (d == "generic") return 4;
    if (d == "graph-involution" || d == "worst") return 6;
    if (d == "transvection") return q == 2 ? 5 : unknown();
    return unknown();
  }
  if (family == "psun") {
    if (d == "generic" || d == "worst") return (int)n;
    return unknown();
  }
  if (family == "psp4") {
    if (d == "generic") return 4;
    if (d == "involution") return 5;
    if (d == "worst") return q == 3 ? 6 : 5;
    return unknown();
  }
  if (family == "pspn") {
    if (d == "generic" || d == "worst") return (int)(2 * n);
    return unknown();
  }
  if (family == "sp-even") {
    if (d == "generic") return (int)(2 * n);
    if (d == "transvection" || d == "worst") return (int)(2 * n + 1);
    return unknown();
  }
  if (family == "bn") {
    if (d == "generic" || d == "worst") return (int)(2 * n + 1);
    return unknown();
  }
  if (family == "dn") {
    if (d == "generic" || d == "worst") return (int)(2 * n);
    return unknown();
  }
  if (family == "suzuki") {
    if (d == "generic" || d == "worst") return 5;  // untwisted rank 2, rank + 3
    return unknown();
  }
  if (family == "exceptional") {
    if (d == "generic") return (int)(n + 3);  // n = untwisted rank
    if (d == "f4-involution") return 8;
    if (d == "worst") return n == 4 ? 8 : (int)(n + 3);
    return unknown();
  }
  fail(Errc::UnknownDescriptor, "unknown family: " + family);
}

// ---------------------------------------------------------------------------

namespace {

BigRat cap_value(const std::string& id, const std::map<std::string, BigInt>& env) {
  auto get = [&](const char* k) -> BigInt {
    auto it = env.find(k);
    if (it == env.end()) fail(Errc::OutOfDomain, std::string("cap needs variable ") + k);
    return it->second;
  };
  if (id == "mu-psl")
    return mu_classical(ClassicalFamily::PSL, (unsigned)(uint64_t)get("n"), get("q")).cap;
  if (id == "mu-psu")
    return mu_classical(ClassicalFamily::PSU, (unsigned)(uint64_t)get("n"), get("q")).cap;
  if (id == "mu-psp")
    return mu_classical(ClassicalFamily::PSp, (unsigned)(uint64_t)get("n"), get("q")).cap;
  if (id == "mu-orth") {
    BigInt q = get("q");
    unsigned n = (unsigned)(uint64_t)get("n");
    return BigRat(big_pow(q, n + 1), q - 1);
  }
  if (id == "exc-2b2") return order_cap_exceptional("2B2", get("q")).cap;
  if (id == "psl2-semi") {
    BigInt p = get("p"), q0 = get("q0"), m = get("m");
    return BigRat(big_pow(p, (unsigned)(uint64_t)m) * (q0 + 1));
  }
  if (id == "psl2-2elt") {
    BigInt q0 = get("q0"), m = get("m");
    return BigRat(big_pow(BigInt(2), (unsigned)(uint64_t)m + 1) * (q0 + 1));
  }
  if (id == "psl2-2elt-even") {
    BigInt m = get("m");
    return BigRat(big_pow(BigInt(2), (unsigned)(uint64_t)m + 1));
  }
  if (id == "eta2-lu") {
    BigInt q = get("q");
    unsigned n = (unsigned)(uint64_t)get("n");
    auto [r, a] = prime_power_decompose(q);
    if (r != 2) fail(Errc::OutOfDomain, "eta2-lu needs a power of 2");
    unsigned m = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++m;
    }
    unsigned t = 0;
    while ((1ull << (t + 1)) < n) ++t;  // 2^t < n <= 2^{t+1}
    return BigRat(big_pow(BigInt(2), t + m + 2));
  }
  fail(Errc::OutOfDomain, "unknown cap id: " + id);
}

bool small_is_prime(long x) {
  if (x < 2) return false;
  for (long d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

bool small_is_pp(long x) {
  if (x < 2) return false;
  long t = x;
  long r = 0;
  for (long d = 2; d * d <= t; ++d)
    if (t % d == 0) {
      r = d;
      break;
    }
  if (r == 0) return true;
  while (t % r == 0) t /= r;
  return t == 1;
}

std::vector<long> var_values(const VarSpec& v) {
  std::vector<long> out;
  for (long x = v.lo; x <= v.hi; ++x) {
    switch (v.kind) {
      case VarSpec::Kind::Int: out.push_back(x); break;
      case VarSpec::Kind::PrimePower:
        if (small_is_pp(x)) out.push_back(x);
        break;
      case VarSpec::Kind::OddPrimePower:
        if (x % 2 == 1 && small_is_pp(x)) out.push_back(x);
        break;
      case VarSpec::Kind::EvenPrimePower:
        if (x % 2 == 0 && small_is_pp(x)) out.push_back(x);
        break;
      case VarSpec::Kind::OddPrime:
        if (x % 2 == 1 && small_is_prime(x)) out.push_back(x);
        break;
    }
  }
  return out;
}

void enumerate_grid(const GridSpec& grid, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<std::vector<long>> values;
  for (const auto& v : grid.vars) values.push_back(var_values(v));
  std::vector<long> point(grid.vars.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == values.size()) {
      fn(point);
      return;
    }
    for (long x : values[i]) {
      point[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

struct EvalResult {
  BigRat lhs, rhs;
  bool survivor;
};

EvalResult eval_point(const Rule& rule, const std::vector<long>& point) {
  std::map<std::string, BigInt> env;
  for (const auto& [k, v] : rule.consts) env[k] = v;
  for (size_t i = 0; i < rule.grid.vars.size(); ++i) env[rule.grid.vars[i].name] = point[i];

  if (!rule.derive.empty()) {
    if (rule.derive == "q=q0^(p^m)") {
      unsigned long ex = (unsigned long)(uint64_t)big_pow(env.at("p"), (unsigned)(uint64_t)env.at("m"));
      env["q"] = big_pow(env.at("q0"), ex);
    } else if (rule.derive == "q=q0^(2^m)") {
      unsigned long ex = 1ul << (unsigned)(uint64_t)env.at("m");
      env["q"] = big_pow(env.at("q0"), ex);
    } else if (rule.derive == "q=2^(2e+1)") {
      env["q"] = big_pow(BigInt(2), 2 * (unsigned)(uint64_t)env.at("e") + 1);
    } else {
      fail(Errc::OutOfDomain, "unknown derive expression: " + rule.derive);
    }
  }

  unsigned n = env.count("n") ? (unsigned)(uint64_t)env.at("n") : 0;
  BigInt q = env.count("q") ? env.at("q") : BigInt(0);
  if (rule.dim_id == "suzuki.dim" && !env.count("q"))
    fail(Errc::OutOfDomain, "suzuki rule needs derived q");

  EvalResult r;
  r.lhs = dim_value(rule.dim_id, n, q);
  int alpha = alpha_upper(rule.family, n, q, rule.alpha);
  BigRat cap = cap_value(rule.cap_id, env);
  r.rhs = BigRat(alpha) * (cap - rule.cap_loss);
  r.survivor = rule.rel_lt ? (r.lhs < r.rhs) : (r.lhs <= r.rhs);
  return r;
}

bool point_admitted(const Rule& rule, const GridSpec& grid, const std::vector<long>& point) {
  if (rule.exclude.count(point)) return false;
  if (rule.require_coprime_p_q0) {
    long p = 0, q0 = 0;
    for (size_t i = 0; i < grid.vars.size(); ++i) {
      if (grid.vars[i].name == "p") p = point[i];
      if (grid.vars[i].name == "q0") q0 = point[i];
    }
    if (p && q0 && q0 % p == 0) return false;
  }
  return true;
}

}  // namespace

SurvivorReport screen(const Rule& rule) {
  SurvivorReport rep;
  rep.rule_id = rule.id;
  enumerate_grid(rule.grid, [&](const std::vector<long>& point) {
    if (!point_admitted(rule, rule.grid, point)) return;
    EvalResult r = eval_point(rule, point);
    rep.certificates.push_back({point, r.lhs, r.rhs, r.survivor});
    if (r.survivor) rep.survivors.insert(point);
  });
  rep.expect_checked = true;
  rep.expect_matched = rep.survivors == rule.expect;
  for (const auto& s : rep.survivors)
    if (!rule.expect.count(s)) rep.unexpected.insert(s);
  for (const auto& e : rule.expect)
    if (!rep.survivors.count(e)) rep.missing.insert(e);
  for (const auto& window : rule.windows) {
    enumerate_grid(window, [&](const std::vector<long>& point) {
      if (!point_admitted(rule, window, point)) return;
      EvalResult r = eval_point(rule, point);
      if (r.survivor) {
        rep.window_ok = false;
        rep.window_violations.insert(point);
      }
    });
  }
  return rep;
}

SurvivorReport screen_with_grid(const Rule& rule, const GridSpec& grid) {
  Rule r = rule;
  r.grid = grid;
  r.windows.clear();
  SurvivorReport rep;
  rep.rule_id = rule.id;
  enumerate_grid(grid, [&](const std::vector<long>& point) {
    if (!point_admitted(r, grid, point)) return;
    EvalResult e = eval_point(r, point);
    rep.certificates.push_back({point, e.lhs, e.rhs, e.survivor});
    if (e.survivor) rep.survivors.insert(point);
  });
  rep.expect_checked = false;
  return rep;
}

RulesVerifyResult verify_rules(const std::vector<Rule>& rules) {
  RulesVerifyResult res;
  if (rules.empty()) {
    res.warnings.push_back("registry is empty; vacuous pass");
    return res;
  }
  auto tuple_str = [](const std::vector<long>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(t[i]);
    }
    return s + ")";
  };
  for (const Rule& rule : rules) {
    SurvivorReport rep = screen(rule);
    ++res.checked;
    for (const auto& u : rep.unexpected) {
      res.pass = false;
      res.issues.push_back({"rule", rule.id, "unexpected survivor " + tuple_str(u)});
    }
    for (const auto& m : rep.missing) {
      res.pass = false;
      res.issues.push_back({"rule", rule.id, "missing survivor " + tuple_str(m)});
    }
    for (const auto& w : rep.window_violations) {
      res.pass = false;
      res.issues.push_back({"window", rule.id, "window point survives " + tuple_str(w)});
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// registry text

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

VarSpec parse_varspec(const std::string& tok) {
  // name:kind=lo..hi
  auto colon = tok.find(':');
  auto eq = tok.find('=');
  auto dots = tok.find("..");
  if (colon == std::string::npos || eq == std::string::npos || dots == std::string::npos)
    fail(Errc::BadHeader, "bad grid variable: " + tok);
  VarSpec v;
  v.name = tok.substr(0, colon);
  std::string kind = tok.substr(colon + 1, eq - colon - 1);
  if (kind == "int") v.kind = VarSpec::Kind::Int;
  else if (kind == "pp") v.kind = VarSpec::Kind::PrimePower;
  else if (kind == "oddpp") v.kind = VarSpec::Kind::OddPrimePower;
  else if (kind == "evenpp") v.kind = VarSpec::Kind::EvenPrimePower;
  else if (kind == "oddprime") v.kind = VarSpec::Kind::OddPrime;
  else fail(Errc::BadHeader, "bad grid kind: " + kind);
  v.lo = std::stol(tok.substr(eq + 1, dots - eq - 1));
  v.hi = std::stol(tok.substr(dots + 2));
  return v;
}

std::set<std::vector<long>> parse_tuples(const std::string& rest) {
  std::set<std::vector<long>> out;
  std::vector<long> cur;
  std::string num;
  bool in_tuple = false;
  auto flushnum = [&]() {
    if (!num.empty()) {
      cur.push_back(std::stol(num));
      num.clear();
    }
  };
  for (char c : rest) {
    if (c == '(') {
      in_tuple = true;
      cur.clear();
    } else if (c == ')') {
      flushnum();
      out.insert(cur);
      in_tuple = false;
    } else if (c == ',' || c == ' ') {
      if (in_tuple && c == ',') {
        flushnum();
      } else if (!in_tuple && !num.empty()) {  // bare comma-separated singletons
        out.insert({std::stol(num)});
        num.clear();
      }
    } else if (c == '-' || (c >= '0' && c <= '9')) {
      num += c;
    }
  }
  if (!in_tuple && !num.empty()) out.insert({std::stol(num)});
  return out;
}

}  // namespace

std::vector<Rule> parse_registry(const std::string& text) {
  std::vector<Rule> rules;
  Rule cur;
  bool open = false;
  auto flush = [&]() {
    if (open) {
      if (cur.dim_id.empty() || cur.cap_id.empty() || cur.alpha.empty())
        fail(Errc::BadHeader, "rule " + cur.id + " is missing dim/alpha/cap");
      rules.push_back(cur);
    }
    cur = Rule{};
    open = false;
  };
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    std::string rest = line.substr(line.find(key) + key.size());
    if (key == "rule") {
      flush();
      open = true;
      if (toks.size() < 2) fail(Errc::BadHeader, "rule line without id");
      cur.id = toks[1];
    } else if (!open) {
      fail(Errc::BadHeader, "registry line outside a rule stanza: " + line);
    } else if (key == "family") {
      cur.family = toks.at(1);
    } else if (key == "const") {
      for (size_t i = 1; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos) fail(Errc::BadHeader, "bad const: " + toks[i]);
        cur.consts[toks[i].substr(0, eq)] = std::stol(toks[i].substr(eq + 1));
      }
    } else if (key == "grid") {
      for (size_t i = 1; i < toks.size(); ++i) cur.grid.vars.push_back(parse_varspec(toks[i]));
    } else if (key == "window") {
      GridSpec w;
      for (size_t i = 1; i < toks.size(); ++i) w.vars.push_back(parse_varspec(toks[i]));
      cur.windows.push_back(w);
    } else if (key == "exclude") {
      for (const auto& t : parse_tuples(rest)) cur.exclude.insert(t);
    } else if (key == "require") {
      if (toks.at(1) == "coprime(p,q0)") cur.require_coprime_p_q0 = true;
      else fail(Errc::BadHeader, "unknown require: " + toks[1]);
    } else if (key == "derive") {
      cur.derive = toks.at(1);
    } else if (key == "dim") {
      cur.dim_id = toks.at(1);
    } else if (key == "alpha") {
      cur.alpha = toks.at(1);
    } else if (key == "cap") {
      cur.cap_id = toks.at(1);
    } else if (key == "rel") {
      cur.rel_lt = toks.at(1) == "lt";
    } else if (key == "caploss") {
      cur.cap_loss = std::stoi(toks.at(1));
    } else if (key == "expect") {
      cur.expect = parse_tuples(rest);
    } else if (key == "cite") {
      size_t pos = line.find("cite");
      cur.cite = line.substr(pos + 5);
    } else {
      fail(Errc::BadHeader, "unknown registry key: " + key);
    }
  }
  flush();
  return rules;
}

std::string format_registry(const std::vector<Rule>& rules) {
  std::ostringstream out;
  auto kind_str = [](VarSpec::Kind k) {
    switch (k) {
      case VarSpec::Kind::Int: return "int";
      case VarSpec::Kind::PrimePower: return "pp";
      case VarSpec::Kind::OddPrimePower: return "oddpp";
      case VarSpec::Kind::EvenPrimePower: return "evenpp";
      case VarSpec::Kind::OddPrime: return "oddprime";
    }
    return "int";
  };
  auto grid_str = [&](const GridSpec& g) {
    std::string s;
    for (const auto& v : g.vars)
      s += " " + v.name + ":" + kind_str(v.kind) + "=" + std::to_string(v.lo) + ".." +
           std::to_string(v.hi);
    return s;
  };
  auto tuples_str = [](const std::set<std::vector<long>>& ts) {
    std::string s;
    bool first = true;
    for (const auto& t : ts) {
      if (!first) s += ",";
      first = false;
      s += "(";
      for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
      }
      s += ")";
    }
    return s;
  };
  for (const Rule& r : rules) {
    out << "rule " << r.id << "\n";
    out << "family " << r.family << "\n";
    if (!r.consts.empty()) {
      out << "const";
      for (const auto& [k, v] : r.consts) out << " " << k << "=" << v;
      out << "\n";
    }
    out << "grid" << grid_str(r.grid) << "\n";
    if (!r.exclude.empty()) out << "exclude " << tuples_str(r.exclude) << "\n";
    if (r.require_coprime_p_q0) out << "require coprime(p,q0)\n";
    if (!r.derive.empty()) out << "derive " << r.derive << "\n";
    for (const auto& w : r.windows) out << "window" << grid_str(w) << "\n";
    out << "dim " << r.dim_id << "\n";
    out << "alpha " << r.alpha << "\n";
    out << "cap " << r.cap_id << "\n";
    if (r.rel_lt) out << "rel lt\n";
    if (r.cap_loss != 1) out << "caploss " << r.cap_loss << "\n";
    out << "expect " << tuples_str(r.expect) << "\n";
    if (!r.cite.empty()) out << "cite " << r.cite << "\n";
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

std::vector<BigInt> elementary_violations(int item, unsigned n, const BigInt& qmax) {
  std::vector<BigInt> out;
  for (long q = 2; BigInt(q) <= qmax; ++q) {
    if (!small_is_pp(q)) continue;
    BigInt Q = q;
    bool holds = true;
    switch (item) {
      case 1: {
        if (n < 3) fail(Errc::OutOfDomain, "item 1 needs n >= 3");
        BigInt c = n >= 5 ? BigInt(n) : (n == 3 ? BigInt(4) : BigInt(7));
        BigInt lhs = exact_int(BigRat(big_pow(Q, n) - 1, Q - 1), "elem.1") - 2;
        holds = lhs > c * (Q - 1);
        break;
      }
      case 2: {
        if (n < 2) fail(Errc::OutOfDomain, "item 2 needs n >= 2");
        if (q % 2 == 0) continue;  // q odd
        BigInt lhs = exact_int(BigRat(big_pow(Q, n) - 1, 2), "elem.2");
        BigInt rhs = (n >= 3 ? BigInt(2 * n) : BigInt(6)) * (Q - 1);
        holds = lhs > rhs;
        break;
      }
      case 3: {
        if (n < 3 || n % 2 == 0) fail(Errc::OutOfDomain, "item 3 needs odd n >= 3");
        BigInt lhs = exact_int(BigRat(big_pow(Q, n) - Q, Q + 1), "elem.3");
        BigInt rhs = (n >= 5 ? BigInt(n) : BigInt(4)) * (Q - 1);
        holds = lhs > rhs;
        break;
      }
      case 4: {
        if (n < 4 || n % 2 == 1) fail(Errc::OutOfDomain, "item 4 needs even n >= 4");
        BigInt lhs = exact_int(BigRat(big_pow(Q, n) - 1, Q + 1), "elem.4");
        BigInt rhs = (n >= 6 ? BigInt(n) : BigInt(6)) * (Q - 1);
        holds = lhs > rhs;
        break;
      }
      default:
        fail(Errc::OutOfDomain, "elementary item must be 1..4");
    }
    if (!holds) out.push_back(Q);
  }
  return out;
}

std::vector<BigInt> elementary_exceptions(int item, unsigned n) {
  if (item == 2 && n == 2) return {3, 5, 7, 9, 11};
  if (item == 3 && n == 3) return {2, 3, 4};
  if (item == 4 && n == 4) return {2};
  return {};
}

std::vector<ElemIneqCheck> elementary_verify_all() {
  std::vector<ElemIneqCheck> out;
  auto run = [&](int item, unsigned n) {
    ElemIneqCheck c;
    c.item = item;
    c.n = n;
    c.computed = elementary_violations(item, n, 64);
    c.expected = elementary_exceptions(item, n);
    c.pass = c.computed == c.expected;
    out.push_back(std::move(c));
  };
  for (unsigned n = 3; n <= 12; ++n) run(1, n);
  for (unsigned n = 2; n <= 8; ++n) run(2, n);
  for (unsigned n = 3; n <= 9; n += 2) run(3, n);
  for (unsigned n = 4; n <= 10; n += 2) run(4, n);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CaseBoundRow> parse_case_bounds(const std::string& text) {
  std::vector<CaseBoundRow> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "formula") continue;  // header
    if (toks.size() != 6) fail(Errc::CountMismatch, "case-bounds row needs 6 columns");
    CaseBoundRow r;
    r.family = toks[0];
    r.n = (unsigned)std::stoul(toks[1]);
    r.q = std::stol(toks[2]);
    r.g_cap = BigInt(toks[3]);
    r.alpha_cap = std::stoi(toks[4]);
    r.dim_bound = BigInt(toks[5]);
    rows.push_back(std::move(r));
  }
  return rows;
}

CaseBoundCheck verify_case_bounds(const std::vector<CaseBoundRow>& rows) {
  CaseBoundCheck c;
  c.rows = rows.size();
  for (const CaseBoundRow& r : rows) {
    std::string item = r.family + "(" + std::to_string(r.n) + "," + std::to_string(r.q) + ")";
    BigInt formula = dim_lower(r.family, r.n, r.q);
    if (formula != r.dim_bound) {
      c.pass = false;
      c.issues.push_back({"casebounds", item,
                          "stored dim bound " + r.dim_bound.str() + " != formula value " +
                              formula.str()});
    }
    if (!(BigInt(r.alpha_cap) * (r.g_cap - 1) < r.dim_bound)) {
      c.pass = false;
      c.issues.push_back({"casebounds", item, "alpha*(cap-1) not < dim bound"});
    }
  }
  return c;
}

}  // namespace accyc
