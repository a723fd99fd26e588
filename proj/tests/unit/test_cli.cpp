// Copyright 2026 The invgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"

namespace fs = std::filesystem;
using invgraph::cli::dispatch;

namespace {
  struct Result {
    int         code = 0;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string data(std::string const& name) {
    return std::string(INVGRAPH_TEST_DATA) + "/" + name;
  }

  // scratch files for one test case
  struct Scratch {
    fs::path dir;
    Scratch() {
      dir = fs::temp_directory_path() / ("invgraph_cli_" + std::to_string(::getpid()));
      fs::create_directories(dir);
    }
    ~Scratch() {
      std::error_code ec;
      fs::remove_all(dir, ec);
    }
    std::string write(std::string const& name, std::string const& text) const {
      std::ofstream(dir / name) << text;
      return (dir / name).string();
    }
    std::string make(std::string const& name, std::vector<std::string> family) const {
      family.insert(family.begin(), "make");
      Result r = run(family);
      REQUIRE(r.code == 0);
      return write(name, r.out);
    }
  };
}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == invgraph::cli::kUsage);
  CHECK(run({"frobnicate"}).code == invgraph::cli::kUsage);
  CHECK(run({"member", data("bouquet.ig")}).code == invgraph::cli::kUsage);
  CHECK(run({"census", data("bouquet.ig"), "--max-norm", "x", "--depth", "1"}).code
        == invgraph::cli::kUsage);
  Result missing = run({"validate", "/nonexistent/graph.ig"});
  CHECK(missing.code == invgraph::cli::kUsage);
  CHECK_FALSE(missing.err.empty());
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("validate and member") {
  Result ok = run({"validate", data("bouquet.ig")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid: 1 vertices, 1 edges, trusted radius unbounded\n");
  Result bad = run({"validate", data("clash.ig")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("line 19") != std::string::npos);

  CHECK(run({"member", data("bouquet.ig"), "a a'"}).out == "true\n");
  Result no = run({"member", data("cycle3.ig"), "a a"});
  CHECK(no.code == 1);
  CHECK(no.out == "false\n");
  CHECK(run({"member", data("cycle3.ig"), "a b"}).code == invgraph::cli::kUsage);
}

TEST_CASE("member in a truncated ball") {
  Scratch     s;
  std::string ball = s.make("line.ig", {"free_group", "1", "2"});
  CHECK(run({"member", ball, "a a'"}).code == 0);
  Result far = run({"member", ball, "a a a a' a' a'"});
  CHECK(far.code == invgraph::cli::kUsage);
  CHECK(far.err.find("untrusted") != std::string::npos);
}

TEST_CASE("make, morphism and cover") {
  Scratch     s;
  std::string six   = s.make("six.ig", {"cycle", "6"});
  std::string three = s.make("three.ig", {"cycle", "3"});
  Result      m     = run({"morphism", six, three});
  CHECK(m.code == 0);
  CHECK(m.out.find("3 -> 0") != std::string::npos);
  Result none = run({"morphism", three, six});
  CHECK(none.code == 1);
  CHECK(none.out == "no morphism\n");
  Result c = run({"cover", six, three});
  CHECK(c.code == 0);
  CHECK(c.out.find("cover true") != std::string::npos);

  CHECK(run({"make", "moebius"}).code == invgraph::cli::kUsage);
  Result asm_ = run({"make", "z2_assembly"});
  CHECK(asm_.code == 0);
  CHECK(asm_.out.find("generators x y") != std::string::npos);
}

TEST_CASE("quotient and dot output") {
  Scratch     s;
  std::string line = s.make("line.ig", {"free_abelian", "1", "4"});
  std::string dot  = (s.dir / "q.dot").string();
  Result      q    = run({"--dot", dot, "quotient", line, "--seeds", "0,2"});
  CHECK(q.code == 0);
  CHECK(q.out.rfind("# saturated true\n", 0) == 0);
  CHECK(fs::exists(dot));
  std::ifstream in(dot);
  std::string   first;
  std::getline(in, first);
  CHECK(first.find("digraph") != std::string::npos);
  CHECK(run({"quotient", line, "--seeds", "zz"}).code == invgraph::cli::kUsage);
}

TEST_CASE("census output") {
  Scratch     s;
  std::string z2  = s.make("z2.ig", {"free_abelian", "2", "8"});
  Result      sum = run({"census", z2, "--max-norm", "5", "--depth", "3"});
  CHECK(sum.code == 0);
  CHECK(sum.out == "norm\ttypes\tcumulative\n1\t1\t1\n2\t1\t2\n3\t1\t3\n4\t1\t4\n5\t1\t5\n");
  Result rows = run({"census", z2, "--max-norm", "1", "--depth", "3", "--rows", "--jobs", "2"});
  CHECK(rows.out.rfind("norm\tvertex\ttype\n", 0) == 0);
  Result small = run({"census", z2, "--max-norm", "6", "--depth", "3"});
  CHECK(small.code == invgraph::cli::kUsage);
}

TEST_CASE("tree decompositions and cone separation") {
  Scratch     s;
  std::string line = s.make("line.ig", {"free_group", "1", "1"});
  std::string td   = s.write("td.txt", "bag t0 a' 1\nbag t1 1 a\ntree-edge t0 t1\n");
  Result      r    = run({"treedec", line, td});
  CHECK(r.code == 0);
  std::string broken = s.write("broken.txt", "bag t0 a' 1\nbag t1 a\ntree-edge t0 t1\n");
  CHECK(run({"treedec", line, broken}).code == 1);
  std::string blocks = s.write("blocks.txt", "block 1\nblock a a'\n");
  CHECK(run({"treedec", line, blocks}).code == 0);

  std::string f2 = s.make("f2.ig", {"free_group", "2", "6"});
  CHECK(run({"conesep", f2, "--vertex", "aa", "--delta", "1"}).code == 0);
  CHECK(run({"conesep", f2, "--vertex", "a", "--delta", "1"}).code == invgraph::cli::kUsage);
  CHECK(run({"conesep", f2, "--vertex", "aaaaa", "--delta", "3"}).code
        == invgraph::cli::kUsage);
}

TEST_CASE("pushdown machines") {
  Scratch     s;
  std::string pda = s.write("counter.pda",
                            "alphabet a\nstack bot x\nbottom bot\nstate q initial final\n"
                            "trans q a bot -> q bot x\ntrans q a x -> q x x\n"
                            "trans q a' x -> q -\n");
  Result r = run({"pda-run", pda, "a a a'"});
  CHECK(r.code == 0);
  CHECK(r.out == "accepted q[bot,x]\n");
  Result blocked = run({"pda-run", pda, "a'"});
  CHECK(blocked.code == 1);
  CHECK(blocked.out.rfind("rejected", 0) == 0);
  Result cg = run({"config-graph", pda, "--height", "3"});
  CHECK(cg.code == 0);
  CHECK(cg.out.find("root q[bot]") != std::string::npos);

  Result d = run({"dyck-pda", data("cycle3.ig"), "--vertex", "1"});
  CHECK(d.code == 0);
  CHECK(d.out.find("state 1 initial") != std::string::npos);
  std::string bad = s.write("bad.pda", "alphabet a\nstack bot\nbottom bot\nstate q\n"
                                       "trans q a bot -> q bot bot bot\nnonsense\n");
  Result parse = run({"pda-run", bad, "a"});
  CHECK(parse.code == 1);
  CHECK(parse.err.find("line 6") != std::string::npos);
}

TEST_CASE("transducers and the word problem") {
  Scratch     s;
  std::string t = s.write("dinf.tr", "input x s\noutput x\nstate 1\nstate s\n"
                                     "edge 1 x -> x 1\nedge 1 s -> - s\n"
                                     "edge s x -> x' s\nedge s s -> - 1\n");
  std::string line = s.make("line.ig", {"free_group", "1", "3"});
  // the output alphabet is {x}, the ball's is {a}
  CHECK(run({"product", t, line}).code == invgraph::cli::kUsage);
  std::string xline = s.write("x.ig", "alphabet x\nvertex 0\nvertex 1\nedge 0 x 1\nroot 0\n");
  Result p = run({"product", t, xline});
  CHECK(p.code == 0);
  CHECK(p.out.find("1:0") != std::string::npos);

  CHECK(run({"wp", data("dinf.asm"), "s x s x"}).out == "true\n");
  Result f = run({"wp", data("dinf.asm"), "x s"});
  CHECK(f.code == 1);
  CHECK(f.out == "false\n");
  CHECK(run({"wp", data("dinf.asm"), "x q"}).code == invgraph::cli::kUsage);
}

TEST_CASE("geodesic words") {
  Scratch     s;
  std::string f2 = s.make("f2.ig", {"free_group", "2", "3"});
  Result      g  = run({"geodesics", f2, "--max-len", "1"});
  CHECK(g.code == 0);
  CHECK(g.out == "1\na\na'\nb\nb'\n");
  CHECK(run({"geodesics", f2, "--max-len", "4"}).code == invgraph::cli::kUsage);
}
