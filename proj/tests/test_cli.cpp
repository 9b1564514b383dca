#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sympcoh/errors.hpp"

using namespace sympcoh;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::filesystem::path kSource = SYMPCOH_SOURCE_DIR;

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("sympcoh_test_" + name);
  std::ofstream(p) << content;
  return p;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("report on the nilpotent four-dimensional families") {
  const Run k = run({"report", "kodaira"});
  CHECK(k.code == 0);
  CHECK(contains(k.out, "  2     4       4      5     5       1\n"));
  CHECK(contains(k.out, "HLC: no\n"));
  CHECK(contains(k.out, "ddLambda-lemma: no\n"));
  CHECK(contains(k.out, "scope: invariant forms\n"));
  CHECK_FALSE(contains(k.out, "non-nilpotent"));

  const Run t = run({"report", "torus4", "--format", "tsv"});
  CHECK(t.code == 0);
  CHECK(contains(t.out, "# HLC: yes\n"));
  for (const std::string line : {"0\t1\t1\t1\t1\t0", "2\t6\t6\t6\t6\t0", "4\t1\t1\t1\t1\t0"})
    CHECK(contains(t.out, line));

  const Run g = run({"report", "g41", "--format", "tsv"});
  CHECK(contains(g.out, "2\t2\t2\t4\t4\t2\n"));

  const Run h = run({"report", "hyperelliptic"});
  CHECK(contains(h.out, "non-nilpotent: values are invariant-level only\n"));
}

TEST_CASE("tsv output matches the golden files") {
  for (const char* name : {"kodaira", "g1_g34m", "g41", "torus4", "hyperelliptic", "torus8"}) {
    const Run r = run({"report", name, "--format", "tsv"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(kSource / "tests" / "golden" / (std::string(name) + ".tsv")));
  }
}

TEST_CASE("shipped input files reproduce the catalog") {
  for (const char* name : {"kodaira", "g1_g34m", "g41", "torus4", "hyperelliptic", "torus8"}) {
    const auto file = (kSource / "data" / (std::string(name) + ".sym")).string();
    CHECK(run({"report", file, "--format", "tsv"}).out == run({"report", name, "--format", "tsv"}).out);
    CHECK(run({"validate", file}).code == 0);
  }
  const auto eta = (kSource / "data" / "etabeta5.sym").string();
  CHECK(run({"jdecomp", eta, "--p", "2", "--q", "0"}).out == run({"jdecomp", "etabeta5", "--p", "2", "--q", "0"}).out);
}

TEST_CASE("jdecomp") {
  const Run eta = run({"jdecomp", "etabeta5", "--p", "1", "--q", "1"});
  CHECK(eta.code == 0);
  CHECK(contains(eta.out, "etabeta5: h_J^(1,1) = 16\n"));
  CHECK(contains(eta.out, "C-infinity pure: yes\n"));
  CHECK(contains(eta.out, "C-infinity full: yes\n"));
  CHECK(contains(run({"jdecomp", "torus8", "--p", "2", "--q", "0"}).out, "torus8: h_J^(2,0),(0,2) = 12\n"));
  const Run t4 = run({"jdecomp", "torus4", "--p", "1", "--q", "1", "--with-representatives"});
  CHECK(contains(t4.out, "torus4: h_J^(1,1) = 4\n  12\n  13+24\n  14-23\n  34\n"));
}

TEST_CASE("pullback") {
  const auto map = (kSource / "data" / "etabeta5_to_torus8.map").string();
  const Run j = run({"pullback", "etabeta5", "torus8", map, "--theory", "J(2,0)"});
  CHECK(j.code == 0);
  CHECK(contains(j.out, "rank 10/12 NOT injective\n"));
  const Run dr = run({"pullback", "etabeta5", "torus8", map, "--theory", "deRham", "--degree", "1"});
  CHECK(contains(dr.out, "rank 8/8 injective\n"));

  const auto id4 = temp_file("id4.map", "rows = 4\ncols = 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n").string();
  for (const char* theory : {"deRham", "dLambda", "BottChern", "Aeppli"})
    for (const char* k : {"0", "1", "2", "3", "4"})
      CHECK(contains(run({"pullback", "kodaira", "kodaira", id4, "--theory", theory, "--degree", k}).out,
                     " injective\n"));
  CHECK(contains(run({"pullback", "kodaira", "kodaira", id4, "--theory", "J(1,1)"}).out, " injective\n"));

  // π*ω ≠ ω̃: exit code 3.
  const auto swap = temp_file("swap.map", "rows = 4\ncols = 4\n0 0 1 0\n0 1 0 0\n1 0 0 0\n0 0 0 1\n").string();
  const Run bad = run({"pullback", "torus4", "torus4", swap, "--theory", "BottChern", "--degree", "2"});
  CHECK(bad.code == 3);
  CHECK(run({"pullback", "torus4", "torus4", swap, "--theory", "deRham", "--degree", "2"}).code == 0);
  CHECK(run({"pullback", "etabeta5", "torus8", map, "--theory", "BottChern", "--degree", "2"}).code == 1);
  CHECK(run({"pullback", "etabeta5", "torus8", map, "--theory", "Hodge", "--degree", "2"}).code == 2);
  CHECK(run({"pullback", "etabeta5", "torus8", map, "--theory", "deRham"}).code == 2);
  const auto ragged = temp_file("ragged.map", "rows = 2\ncols = 2\n1 0\n0\n").string();
  CHECK(run({"pullback", "torus4", "torus4", ragged, "--degree", "1"}).code == 2);
}

TEST_CASE("validate and exit codes") {
  const auto bad_jacobi = temp_file("jacobi.sym", "d = (0,0,12,34)\n").string();
  const Run j = run({"validate", bad_jacobi});
  CHECK(j.code == 1);
  CHECK(contains(j.out, "Jacobi: FAILS at e4, d(de4) = 124"));

  const auto not_closed = temp_file("closed.sym", "dim = 4\nd = (0,0,-23,24)\nomega = 13\n").string();
  CHECK(run({"validate", not_closed}).code == 1);
  CHECK(run({"report", not_closed}).code == 1);

  const auto syntax = temp_file("syntax.sym", "d = (0,0,11)\n").string();
  CHECK(run({"report", syntax}).code == 2);
  const auto mismatch = temp_file("mismatch.sym", "dim = 5\nd = (0,0,0,23)\n").string();
  CHECK(run({"validate", mismatch}).code == 1);
  const auto unknown_key = temp_file("key.sym", "d = (0,0,0,23)\nfoo = 1\n").string();
  CHECK(run({"validate", unknown_key}).code == 2);
  const auto bad_j = temp_file("badj.sym", "d = (0,0,0,0)\nJ = [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]\n").string();
  const Run bj = run({"validate", bad_j});
  CHECK(bj.code == 1);
  CHECK(contains(bj.out, "J^2 != -1 in column 1"));
  const auto ragged_j = temp_file("raggedj.sym", "d = (0,0)\nJ = [[0,-1],[1]]\n").string();
  CHECK(run({"validate", ragged_j}).code == 2);

  const auto named = temp_file("named.sym", "# only a name\nname = g41\n").string();
  CHECK(run({"report", named, "--format", "tsv"}).out == run({"report", "g41", "--format", "tsv"}).out);

  CHECK(run({"report", "etabeta5"}).code == 1);
  CHECK(run({"report", "no-such-entry"}).code == 1);
  CHECK(run({}).code == 2);
  CHECK(run({"report"}).code == 2);
  CHECK(run({"report", "kodaira", "--format", "xml"}).code == 2);
}

TEST_CASE("size guard") {
  ::setenv("SYMPCOH_MAX_DIM", "8", 1);
  CHECK(run({"validate", "etabeta5"}).code == 1);
  CHECK(run({"validate", "torus8"}).code == 0);
  ::unsetenv("SYMPCOH_MAX_DIM");
  CHECK(run({"validate", "etabeta5"}).code == 0);
}

TEST_CASE("catalog list") {
  const Run r = run({"catalog", "list"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "kodaira\t4\t(0,0,0,23)\t12+34\tJ\tnilpotent\n"));
  CHECK(contains(r.out, "etabeta5\t10\t"));
}

TEST_CASE("output is deterministic") {
  for (const char* name : {"kodaira", "g41", "torus8"}) {
    const Run a = run({"report", name});
    const Run b = run({"report", name});
    CHECK(a.out == b.out);
  }
  CHECK(run({"jdecomp", "etabeta5", "--p", "2", "--q", "0", "--with-representatives"}).out ==
        run({"jdecomp", "etabeta5", "--p", "2", "--q", "0", "--with-representatives"}).out);
}

TEST_CASE("input parsing helpers") {
  const Matrix m = cli::parse_matrix("[[0, -1], [1, 1/2]]");
  CHECK(m == Matrix{{0, -1}, {1, Rational(1, 2)}});
  CHECK_THROWS_AS(cli::parse_matrix("[[0,-1],[1,0]"), ParseError);
  CHECK_THROWS_AS(cli::parse_matrix("[[0,x]]"), ParseError);
  CHECK(cli::parse_map_file("rows = 1\ncols = 2\n# comment\n1, 2\n") == Matrix{{1, 2}});
  CHECK_THROWS_AS(cli::parse_map_file("rows = 2\ncols = 1\n1\n"), ParseError);
}

}  // TEST_SUITE
