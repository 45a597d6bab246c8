#include <doctest.h>

#include "accyc/formats.hpp"
#include "accyc/groupscan.hpp"
#include "support.hpp"

using namespace accyc;
using namespace testsupport;

namespace {

GroupSpec gl2_2() {
  Field f2 = field_create(2, 1);
  GroupSpec spec;
  spec.ctx = f2;
  spec.dim = 2;
  spec.gens.push_back(Mat(f2, 2, 2, {0, 1, 1, 0}));
  spec.gens.push_back(Mat(f2, 2, 2, {1, 1, 0, 1}));
  return spec;
}

GroupSpec gl3_2() {
  Field f2 = field_create(2, 1);
  GroupSpec spec;
  spec.ctx = f2;
  spec.dim = 3;
  spec.gens.push_back(Mat::companion(Poly(f2, {1, 1, 0, 1})));
  spec.gens.push_back(Mat(f2, 3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1}));
  return spec;
}

}  // namespace

TEST_CASE("closure of GL2(2) is S3") {
  ClosureResult c = closure_enumerate(gl2_2(), 100);
  CHECK(c.order == 6);
  std::map<uint64_t, uint64_t> want{{1, 1}, {2, 3}, {3, 2}};
  CHECK(c.order_histogram == want);
}

TEST_CASE("closure of GL3(2): order 168 and the full order multiset") {
  ClosureResult c = closure_enumerate(gl3_2(), 1000);
  CHECK(c.order == 168);
  std::map<uint64_t, uint64_t> want{{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}};
  CHECK(c.order_histogram == want);
}

TEST_CASE("closure of SL2(3) has 24 elements") {
  Field f3 = field_create(3, 1);
  GroupSpec spec;
  spec.ctx = f3;
  spec.dim = 2;
  spec.gens.push_back(Mat(f3, 2, 2, {1, 1, 0, 1}));
  spec.gens.push_back(Mat(f3, 2, 2, {1, 0, 1, 1}));
  CHECK(closure_enumerate(spec, 100).order == 24);
}

TEST_CASE("closure result is closed under generator multiplication") {
  GroupSpec spec = gl3_2();
  ClosureResult c = closure_enumerate(spec, 1000);
  std::set<PackedMat> seen(c.elements.begin(), c.elements.end());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const PackedMat& key = c.elements[rng() % c.elements.size()];
    Mat m = unpack_mat(spec.ctx, spec.dim, key);
    for (const Mat& g : spec.gens) CHECK(seen.count(pack_mat(mat_mul(m, g))) == 1);
  }
}

TEST_CASE("closure cap raises CapExceeded") {
  try {
    closure_enumerate(gl3_2(), 100);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
}

TEST_CASE("singular generators are rejected") {
  Field f2 = field_create(2, 1);
  GroupSpec spec;
  spec.ctx = f2;
  spec.dim = 2;
  spec.gens.push_back(Mat(f2, 2, 2, {1, 1, 1, 1}));
  try {
    closure_enumerate(spec, 10);
    FAIL("expected SingularGenerator");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SingularGenerator);
  }
}

TEST_CASE("random_elements is deterministic and count=0 errors") {
  GroupSpec spec = gl3_2();
  auto a = random_elements(spec, 100, 42);
  auto b = random_elements(spec, 100, 42);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  auto c = random_elements(spec, 100, 43);
  bool differs = false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == c[i])) differs = true;
  CHECK(differs);
  try {
    random_elements(spec, 0, 1);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidArgument);
  }
}

TEST_CASE("sampled order histogram covers every order of GL3(2)") {
  GroupSpec spec = gl3_2();
  std::set<uint64_t> seen;
  for (const Mat& m : random_elements(spec, 10000, 7)) seen.insert(*element_order(m));
  CHECK(seen == std::set<uint64_t>{1, 2, 3, 4, 7});
}

TEST_CASE("default-policy scan of GL3(2) finds only almost-cyclic fingerprints") {
  ScanPolicy policy;
  policy.closure_cap = 1000;
  ScanReport rep = scan_almost_cyclic(gl3_2(), policy);
  CHECK(rep.exhaustive);
  CHECK(rep.group_order == 168);
  // default policy surveys prime-power orders coprime to the characteristic
  std::set<uint64_t> orders;
  for (const auto& r : rep.rows) {
    orders.insert(r.order);
    CHECK(r.strict == TriState::True);
    CHECK(r.appendix == TriState::True);
  }
  CHECK(orders == std::set<uint64_t>{3, 7});
}

TEST_CASE("GL4(2) order-2 fingerprint merges transvections with double transvections") {
  // Both have charpoly (x+1)^4, so the fingerprint is INCONSISTENT in strict
  // mode: transvections are almost cyclic, two 2-blocks are not. Appendix
  // mode calls both true, which is exactly the divergence the two modes show.
  Field f2 = field_create(2, 1);
  GroupSpec spec = gl_group(4, f2);
  ScanPolicy policy;
  policy.closure_cap = 30000;
  policy.order_whitelist = {2};
  ScanReport rep = scan_almost_cyclic(spec, policy);
  CHECK(rep.exhaustive);
  CHECK(rep.group_order == 20160);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].order == 2);
  CHECK(rep.rows[0].strict == TriState::Inconsistent);
  CHECK(rep.rows[0].appendix == TriState::True);

  // representatives, checked against the invariant-factor oracle directly
  Mat transvection = Mat::identity(f2, 4);
  transvection.at(0, 1) = 1;
  CHECK(oracle_is_almost_cyclic(transvection).almost_cyclic);
  Mat dbl = Mat::identity(f2, 4);
  dbl.at(0, 1) = 1;
  dbl.at(2, 3) = 1;
  CHECK(!oracle_is_almost_cyclic(dbl).almost_cyclic);
}

TEST_CASE("scan falls back to sampling when the closure cap is exceeded") {
  ScanPolicy policy;
  policy.closure_cap = 100;  // GL3(2) has 168 elements
  policy.samples = 500;
  policy.seed = 3;
  ScanReport rep = scan_almost_cyclic(gl3_2(), policy);
  CHECK(!rep.exhaustive);
  CHECK(rep.group_order == 0);  // sampled mode never claims completeness
  CHECK(rep.surveyed > 0);
  for (const auto& r : rep.rows) {
    CHECK(r.strict == TriState::True);
    CHECK(r.appendix == TriState::True);
  }
}

TEST_CASE("scan verdicts are invariant under conjugating the generators") {
  std::mt19937_64 rng(9);
  GroupSpec spec = gl3_2();
  Field f2 = spec.ctx;
  Mat p = random_invertible(f2, 3, rng);
  Mat pinv = mat_inverse(p);
  GroupSpec conj;
  conj.ctx = f2;
  conj.dim = 3;
  for (const Mat& g : spec.gens) conj.gens.push_back(mat_mul(mat_mul(p, g), pinv));
  ScanPolicy policy;
  policy.closure_cap = 1000;
  ScanReport a = scan_almost_cyclic(spec, policy);
  ScanReport b = scan_almost_cyclic(conj, policy);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].order == b.rows[i].order);
    CHECK(a.rows[i].charpoly == b.rows[i].charpoly);
    CHECK(a.rows[i].count == b.rows[i].count);
    CHECK(a.rows[i].strict == b.rows[i].strict);
  }
}

TEST_CASE("fingerprints are constant on conjugacy classes") {
  GroupSpec spec = gl3_2();
  ClosureResult c = closure_enumerate(spec, 1000);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    Mat m = unpack_mat(spec.ctx, spec.dim, c.elements[rng() % c.elements.size()]);
    Mat p = random_invertible(spec.ctx, 3, rng);
    Mat conj = mat_mul(mat_mul(p, m), mat_inverse(p));
    CHECK(*element_order(m) == *element_order(conj));
    CHECK(charpoly(m) == charpoly(conj));
  }
}

TEST_CASE("semisimple elements have squarefree minimal polynomials") {
  GroupSpec spec = gl3_2();
  ClosureResult c = closure_enumerate(spec, 1000);
  for (size_t i = 0; i < c.elements.size(); ++i) {
    if (c.element_orders[i] % 2 == 0) continue;  // keep order coprime to char
    Mat m = unpack_mat(spec.ctx, spec.dim, c.elements[i]);
    CHECK(poly_is_squarefree(minpoly(m)));
  }
}

TEST_CASE("mode agreement on semisimple elements") {
  GroupSpec spec = gl3_2();
  for (const Mat& m : random_elements(spec, 2000, 21)) {
    uint64_t o = *element_order(m);
    if (o % 2 == 0) continue;
    CHECK(is_almost_cyclic(m, Mode::Strict).almost_cyclic ==
          is_almost_cyclic(m, Mode::Appendix).almost_cyclic);
  }
}

TEST_CASE("eta_oracle equals the closed form on every in-cap pair") {
  std::vector<std::pair<unsigned, uint32_t>> groups{{2, 2}, {2, 3}, {2, 4}, {2, 5},
                                                    {2, 7}, {3, 2}, {3, 3}, {4, 2}};
  for (auto [n, q] : groups) {
    for (uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
      if (q % p == 0 || gl_order(n, q) % p != 0) continue;
      CHECK(eta_oracle(n, q, p) == (uint64_t)eta_gl(p, n, q));
    }
  }
  try {
    eta_oracle(4, 5, 3, 1000);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
}
