#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "eacat/ea_format.hpp"
#include "eacat/generators.hpp"

using namespace eacat;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("eacat-test-" + name);
  std::ofstream(path) << text;
  return path.string();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("gen chain re-parses and verifies") {
  Result g = run({"gen", "chain", "4"});
  CHECK(g.code == 0);
  CHECK(parse_ea_string(g.out).same_structure(chain(4)));
  std::string path = temp_file("c4.ea", g.out);
  Result v = run({"verify", path, "--max-level", "2"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("PASS interchange\n") != std::string::npos);
}

TEST_CASE("cell count") {
  std::string path = temp_file("c2.ea", to_ea_string(chain(2)));
  Result r = run({"cells", path, "--level", "1", "--count"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
  Result l = run({"cells", path, "--level", "0", "--list"});
  CHECK(l.out == "(0)\n(1)\n(2)\n");
  CHECK(run({"cells", path, "--level", "1", "--count", "--list"}).code == 2);
}

TEST_CASE("axiom failure exits 1 with a witness") {
  std::string path = temp_file("bad.ea", "ea 1\nelements 0 a one\none one\n"
                                         "sum 0 0 0\nsum 0 a a\nsum 0 one one\nsum a one a\n");
  Result r = run({"check", path});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL axiom-3 witness: a\n") != std::string::npos);
}

TEST_CASE("check runs derived properties on valid input") {
  std::string path = temp_file("b2.ea", to_ea_string(boolean(2)));
  Result r = run({"check", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS cancellativity\n") != std::string::npos);
  Result t = run({"--format", "terse", "check", path});
  CHECK(t.out == "passed 22 failed 0 refused 0\n");
  Result d = run({"derive", path});
  CHECK(d.code == 0);
  CHECK(d.out.find("PASS round-trip\n") != std::string::npos);
  CHECK(d.out.find("# ab - a = b\n") != std::string::npos);
}

TEST_CASE("generators") {
  std::string c1 = temp_file("c1.ea", to_ea_string(chain(1)));
  Result p = run({"gen", "product", c1, c1});
  CHECK(p.code == 0);
  CHECK(isomorphic(parse_ea_string(p.out), boolean(2)));
  std::string c4 = temp_file("c4b.ea", to_ea_string(chain(4)));
  Result i = run({"gen", "interval", c4, "1", "3"});
  CHECK(i.code == 0);
  CHECK(parse_ea_string(i.out).names() == std::vector<std::string>{"1", "2", "3"});
  CHECK(run({"gen", "boolean", "2"}).out == to_ea_string(boolean(2)));
  CHECK(run({"gen", "interval", c4, "3", "1"}).code == 2);
  CHECK(run({"gen", "chain", "x"}).code == 2);
  CHECK(run({"gen", "cube", "3"}).code == 2);
}

TEST_CASE("usage errors") {
  Result none = run({});
  CHECK(none.code == 2);
  CHECK(none.err.find("Usage") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"simplex-check", "--max-n", "9"}).code == 2);
  CHECK(run({"--jobs", "0", "simplex-check"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("parse errors name file and line") {
  std::string path = temp_file("broken.ea", "ea 1\nelements 0\none 0\nsum 0 0 q\n");
  Result r = run({"check", path});
  CHECK(r.code == 2);
  CHECK(r.err.find(path + ":4:") != std::string::npos);
}

TEST_CASE("guards and force") {
  std::string path = temp_file("c6.ea", to_ea_string(chain(6)));
  Result r = run({"cells", path, "--level", "5", "--count"});
  CHECK(r.code == 2);
  CHECK(r.err.find("refused") != std::string::npos);
  Result f = run({"--force", "cells", path, "--level", "5", "--count"});
  CHECK(f.code == 0);
  CHECK(f.out == "12376\n");
  CHECK(f.err.find("warning") != std::string::npos);
  Result v = run({"verify", path, "--max-level", "5"});
  CHECK(v.code == 1);
  CHECK(v.out.find("REFUSED enumeration") != std::string::npos);
}

TEST_CASE("simplex check") {
  Result r = run({"simplex-check", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS face-face\n") != std::string::npos);
}

TEST_CASE("hilbert and pullback") {
  std::string seeds = temp_file("p.mat", "mat 1\nmatrix 2\n1 0\n0 0\n");
  Result h = run({"hilbert", "proj", "--dim", "2", "--seeds", seeds});
  CHECK(h.code == 0);
  EffectAlgebra a = parse_ea_string(h.out);
  CHECK(isomorphic(a, boolean(2)));

  std::string out = (std::filesystem::temp_directory_path() / "eacat-test-proj.ea").string();
  Result e = run({"hilbert", "proj", "--dim", "2", "--seeds", seeds, "--emit-ea", out});
  CHECK(e.code == 0);
  Result p = run({"pullback", out});
  CHECK(p.code == 0);
  CHECK(p.out == "PASS orthoalgebra\nPASS precondition-orthoalgebra\nPASS pullback\n");

  std::string half = temp_file("h.mat", "mat 1\nmatrix 2\n1/2 0\n0 1/2\n");
  std::string hout = (std::filesystem::temp_directory_path() / "eacat-test-half.ea").string();
  CHECK(run({"hilbert", "bound", "--dim", "2", "--seeds", half, "--emit-ea", hout}).code == 0);
  Result q = run({"pullback", hout});
  CHECK(q.code == 1);
  CHECK(q.out.find("FAIL orthoalgebra witness: [[1/2,0],[0,1/2]]\n") != std::string::npos);

  CHECK(run({"hilbert", "proj", "--dim", "2", "--seeds", half}).code == 2);
  CHECK(run({"hilbert", "weird", "--dim", "2", "--seeds", half}).code == 2);
}

TEST_CASE("output is identical for any worker count") {
  std::string path = temp_file("b2v.ea", to_ea_string(boolean(2)));
  Result a = run({"verify", path, "--max-level", "2"});
  Result b = run({"--jobs", "4", "verify", path, "--max-level", "2"});
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
}

} // TEST_SUITE
