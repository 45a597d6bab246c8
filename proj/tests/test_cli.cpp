#include <doctest.h>

#include <fstream>
#include <sstream>

#include "accyc/cli.hpp"
#include "accyc/formats.hpp"

using namespace accyc;

namespace {

struct CliRun {
  int exit;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data_dir() { return ACCYC_DATA_DIR; }

}  // namespace

TEST_CASE("eta and cap subcommands") {
  auto r = cli({"eta", "2", "2", "3"});
  CHECK(r.exit == 0);
  CHECK(r.out == "8\n");
  CHECK(cli({"cap", "psl", "3", "2"}).out == "7\n");
  CHECK(cli({"cap", "psp", "2", "3"}).out == "27/2\n");
  CHECK(cli({"cap", "2b2", "8"}).out == "39\n");
  CHECK(cli({"cap", "nosuch", "8"}).exit == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).exit == 2);
  CHECK(cli({"screen"}).exit == 2);
  CHECK(cli({"frobnicate"}).exit == 2);
}

TEST_CASE("screen reports survivors and exits 0 on match") {
  auto r = cli({"screen", "--rule", "psl3-nonweil", "--registry", data_dir() + "/rules.txt"});
  CHECK(r.exit == 0);
  CHECK(r.out.find("survivors (5),(7),(13)") != std::string::npos);
  CHECK(r.out.find("window ok") != std::string::npos);
  CHECK(cli({"screen", "--rule", "no-such-rule", "--registry", data_dir() + "/rules.txt"}).exit ==
        2);
}

TEST_CASE("test-matrix report line format") {
  std::string f = "/tmp/accyc_test_mat.gfmat";
  write_file(f, "gfmat 7 1 4 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 2\n");
  auto r = cli({"test-matrix", f});
  CHECK(r.exit == 0);
  CHECK(r.out ==
        f + ": almost_cyclic=true mode=strict alpha=1 k=2 cyclic=false scalar=false\n");
  auto r2 = cli({"test-matrix", f, "--mode", "appendix"});
  CHECK(r2.out.find("mode=appendix") != std::string::npos);
}

TEST_CASE("enumerate matches the stored order") {
  auto r = cli({"enumerate", "--gens", data_dir() + "/groups/gl3_2_natural.grp"});
  CHECK(r.exit == 0);
  CHECK(r.out.find("order 168") != std::string::npos);
  CHECK(r.out.find("histogram 1:1 2:21 3:56 4:42 7:48") != std::string::npos);
}

TEST_CASE("scan output is deterministic across runs") {
  std::vector<std::string> args{"scan",  "--gens", data_dir() + "/groups/gl3_2_natural.grp",
                                "--seed", "5",     "--samples", "200"};
  auto a = cli(args);
  auto b = cli(args);
  CHECK(a.exit == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("exhaustive=true") != std::string::npos);
}

TEST_CASE("fixtures verify passes on the shipped data") {
  auto r = cli({"fixtures", "verify", "--data", data_dir()});
  CHECK(r.exit == 0);
  CHECK(r.out.find("PASS fixtures") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("negative control: mutated fixtures are reported item by item") {
  // copy the data directory, then mutate one expected set and one histogram count
  std::string tmp = "/tmp/accyc_fixture_mutation";
  REQUIRE(std::system(("rm -rf " + tmp + " && cp -r " + data_dir() + " " + tmp).c_str()) == 0);

  std::string rules = read_file(tmp + "/rules.txt");
  auto pos = rules.find("expect (5),(7),(13)");
  REQUIRE(pos != std::string::npos);
  rules.replace(pos, std::string("expect (5),(7),(13)").size(), "expect (5),(7)");
  write_file(tmp + "/rules.txt", rules);

  std::string scans = read_file(tmp + "/scanchecks.tsv");
  auto hpos = scans.find("3:56");
  REQUIRE(hpos != std::string::npos);
  scans.replace(hpos, 4, "3:57");
  write_file(tmp + "/scanchecks.tsv", scans);

  auto r = cli({"fixtures", "verify", "--data", tmp});
  CHECK(r.exit == 1);
  size_t mism = 0;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> reported;
  while (std::getline(lines, line))
    if (line.rfind("MISMATCH", 0) == 0) {
      ++mism;
      reported.push_back(line);
    }
  REQUIRE(mism == 2);  // exactly the two mutated items
  CHECK(reported[0].find("psl3-nonweil") != std::string::npos);
  CHECK(reported[0].find("(13)") != std::string::npos);
  CHECK(reported[1].find("order 3") != std::string::npos);
  CHECK(reported[1].find("computed 56 expected 57") != std::string::npos);
}
