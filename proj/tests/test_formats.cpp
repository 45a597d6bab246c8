#include <doctest.h>

#include "accyc/formats.hpp"
#include "support.hpp"

using namespace accyc;
using namespace testsupport;

#define CHECK_ERR(expr, errcode)               \
  do {                                         \
    try {                                      \
      (void)(expr);                            \
      FAIL("expected " #errcode);              \
    } catch (const Error& e) {                 \
      CHECK(e.code() == errcode);              \
    }                                          \
  } while (0)

TEST_CASE("gfmat parse examples") {
  Mat id2 = parse_gfmat("gfmat 2 1 2 2\n1 0\n0 1\n");
  CHECK(mat_is_identity(id2));
  CHECK_ERR(parse_gfmat("gfmat 2 1 2 2\n7 0\n0 1\n"), Errc::EntryOutOfRange);
  CHECK_ERR(parse_gfmat("gfmat 2 1 2 2\n1 0\n0\n"), Errc::CountMismatch);
  CHECK_ERR(parse_gfmat("gfmat 2 1 2 2\n1 0 0 1 1\n"), Errc::CountMismatch);
  CHECK_ERR(parse_gfmat("matrix 2 1 2 2\n1 0 0 1\n"), Errc::BadHeader);
  CHECK_ERR(parse_gfmat("gfmat 6 1 2 2\n1 0 0 1\n"), Errc::BadHeader);
}

TEST_CASE("gfmat writer-parser identity on random matrices") {
  std::mt19937_64 rng(29);
  auto pps = prime_powers_upto(16);
  for (int t = 0; t < 1000; ++t) {
    uint32_t q = pps[rng() % pps.size()];
    auto [p, k] = split_prime_power(q);
    Field F = field_create(p, k);
    size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    std::vector<uint32_t> e(rows * cols);
    for (auto& x : e) x = (uint32_t)(rng() % q);
    Mat m(F, rows, cols, e);
    Mat back = parse_gfmat(write_gfmat(m));
    CHECK(back == m);
    CHECK(write_gfmat(back) == write_gfmat(m));  // byte-exact round trip
  }
}

TEST_CASE("meataxe mode-1 parse examples") {
  Mat id3 = parse_meataxe_ascii("1 2 3 3\n100\n010\n001\n");
  CHECK(mat_is_identity(id3));
  CHECK(id3.ctx()->q() == 2);

  Mat row = parse_meataxe_ascii("1 11 1 2\n10 3\n");
  CHECK(row.rows() == 1);
  CHECK(row.at(0, 0) == 10);
  CHECK(row.at(0, 1) == 3);

  CHECK_ERR(parse_meataxe_ascii("2 2 3 3\n100\n010\n001\n"), Errc::UnsupportedMode);
  CHECK_ERR(parse_meataxe_ascii("1 2 3 3\n100\n010\n"), Errc::CountMismatch);
  CHECK_ERR(parse_meataxe_ascii("1 3 2 2\n13\n01\n"), Errc::EntryOutOfRange);
  CHECK_ERR(parse_meataxe_ascii("1 6 2 2\n1 0 0 1\n"), Errc::BadHeader);
}

TEST_CASE("meataxe digit bodies tolerate line wrapping") {
  Mat a = parse_meataxe_ascii("1 3 2 3\n120\n21\n2\n");
  Mat b = parse_meataxe_ascii("1 3 2 3\n120212\n");
  CHECK(a == b);
}

TEST_CASE("meataxe non-prime q records the encoding assumption") {
  std::vector<std::string> warnings;
  Mat m = parse_meataxe_ascii("1 4 2 2\n1230\n", &warnings);
  CHECK(m.ctx()->q() == 4);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("canonical") != std::string::npos);
}

TEST_CASE("group files round-trip and validate generators") {
  std::string text = read_file(std::string(ACCYC_DATA_DIR) + "/groups/gl3_2_natural.grp");
  GroupSpec spec = parse_group_file(text);
  CHECK(spec.dim == 3);
  CHECK(spec.gens.size() == 2);
  CHECK(spec.name == "GL3(2)");
  CHECK(spec.expected_order == 168);
  CHECK(write_group_file(spec) == text);

  CHECK_ERR(parse_group_file("group 2 1 2 1\n1 1\n1 1\n"), Errc::SingularGenerator);
  CHECK_ERR(parse_group_file("group 2 1 2 1\n1 1\n"), Errc::CountMismatch);
}

TEST_CASE("ingest detects formats") {
  CHECK(ingest_text("gfmat 2 1 1 1\n1\n", "x").format == "gfmat");
  CHECK(ingest_text("1 2 1 1\n1\n", "x").format == "meataxe");
  CHECK(ingest_text("group 2 1 1 1\n1\n", "x").format == "group");
  CHECK_ERR(ingest_text("", "x"), Errc::BadHeader);
}
