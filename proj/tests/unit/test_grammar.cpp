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

#include <map>
#include <set>
#include <sstream>

#include "invgraph/error.hpp"
#include "invgraph/families.hpp"
#include "invgraph/grammar.hpp"
#include "invgraph/metric.hpp"
#include "support.hpp"

using namespace invgraph;
using testing::w;

namespace {
  // L(X) ∩ Ã^n for n <= max_len, built by concatenating shorter languages.
  // Shares nothing with the CYK table walk.
  std::vector<std::set<Word>> language(CnfGrammar const& g, std::size_t max_len) {
    std::size_t const                     nv = g.variables.size();
    std::vector<std::vector<std::set<Word>>> by_len(max_len + 1,
                                                    std::vector<std::set<Word>>(nv));
    for (TerminalRule const& t : g.terminal) {
      if (max_len >= 1) {
        by_len[1][t.lhs].insert(Word{t.letter});
      }
    }
    for (std::size_t n = 2; n <= max_len; ++n) {
      for (BinaryRule const& r : g.binary) {
        for (std::size_t i = 1; i < n; ++i) {
          for (Word const& u : by_len[i][r.left]) {
            for (Word const& v : by_len[n - i][r.right]) {
              by_len[n][r.lhs].insert(concat(u, v));
            }
          }
        }
      }
    }
    std::vector<std::set<Word>> out(nv);
    for (std::size_t n = 0; n <= max_len; ++n) {
      for (std::size_t x = 0; x < nv; ++x) {
        out[x].insert(by_len[n][x].begin(), by_len[n][x].end());
      }
    }
    if (g.accepts_empty) {
      out[g.start].insert(Word{});
    }
    return out;
  }

  std::string const kOneLoop = R"(alphabet a
start S
rule S -> A B
rule A -> a
rule B -> a'
)";

  std::string const kCube = R"(alphabet a
start S
rule S -> A X
rule X -> A A
rule A -> a
)";
}  // namespace

TEST_CASE("grammar text round trip") {
  CnfGrammar g = read_grammar_string(kOneLoop);
  CHECK(g.variables.size() == 3);
  CHECK(g.binary.size() == 1);
  CHECK(g.terminal.size() == 2);
  CHECK_FALSE(g.accepts_empty);
  std::ostringstream out;
  write_grammar(out, g);
  CnfGrammar back = read_grammar_string(out.str());
  std::ostringstream again;
  write_grammar(again, back);
  CHECK(out.str() == again.str());

  CnfGrammar alt = read_grammar_string("alphabet a b\nstart S\nrule S -> A B | B A\nrule A -> a\n"
                                       "rule B -> b'\nepsilon\n");
  CHECK(alt.binary.size() == 2);
  CHECK(alt.accepts_empty);
}

TEST_CASE("grammar rejects non-CNF input") {
  // start symbol on a right-hand side
  std::string const recursive = R"(alphabet a
start S
rule S -> A T | A B
rule T -> S B
rule A -> a
rule B -> a'
epsilon
)";
  CHECK_THROWS_AS(read_grammar_string(recursive), ParseError);
  // three symbols
  CHECK_THROWS_AS(read_grammar_string("alphabet a\nstart S\nrule S -> A A A\nrule A -> a\n"),
                  ParseError);
  // unproductive
  CHECK_THROWS_AS(read_grammar_string("alphabet a\nstart S\nrule S -> A X\nrule A -> a\n"
                                      "rule X -> A X\n"),
                  ParseError);
  // unknown letter
  try {
    (void)read_grammar_string("alphabet a\nstart S\nrule S -> b\n");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("grammar_issues reports unreachable variables") {
  CnfGrammar g;
  g.terminals = standard_alphabet(1);
  g.start     = g.ensure_variable("S");
  std::size_t A = g.ensure_variable("A");
  std::size_t U = g.ensure_variable("U");
  g.terminal.push_back({g.start, Letter::positive(0)});
  g.terminal.push_back({A, Letter::positive(0)});
  g.terminal.push_back({U, Letter::negative(0)});
  auto issues = grammar_issues(g);
  CHECK(issues.size() == 2);
}

TEST_CASE("cyk by hand") {
  CnfGrammar   g = read_grammar_string(kOneLoop);
  Alphabet const& a = g.terminals;
  auto tree = cyk_member(g, w(a, "a a'"));
  REQUIRE(tree);
  REQUIRE(tree->nodes.size() == 3);
  CHECK(tree->nodes[0].begin == 0);
  CHECK(tree->nodes[0].end == 2);
  CHECK_FALSE(cyk_member(g, w(a, "a' a")));
  CHECK_FALSE(cyk_member(g, Word{}));
  CHECK_FALSE(cyk_member(g, w(a, "a a' a a'")));

  CnfGrammar cube = read_grammar_string(kCube);
  CHECK(cyk_member(cube, w(cube.terminals, "a a a")));
  CHECK_FALSE(cyk_member(cube, w(cube.terminals, "a a")));
}

TEST_CASE("cyk agrees with the language oracle") {
  std::vector<CnfGrammar> grammars = {
      read_grammar_string(kOneLoop),
      read_grammar_string(kCube),
      dyck_grammar(standard_alphabet(1)),
      dyck_grammar(standard_alphabet(2)),
  };
  for (CnfGrammar const& g : grammars) {
    std::size_t const max_len = g.terminals.rank() == 1 ? 10 : 6;
    auto const        lang    = language(g, max_len);
    std::size_t       yes     = 0;
    testing::for_each_word(g.terminals, max_len, [&](Word const& u) {
      bool const expect = lang[g.start].count(u) > 0;
      auto       tree   = cyk_member(g, u);
      REQUIRE(tree.has_value() == expect);
      if (tree && !u.empty()) {
        // the tree spans the word and every leaf is a terminal rule
        CHECK(tree->nodes[0].end == u.size());
        for (auto const& node : tree->nodes) {
          if (!node.left) {
            CHECK(node.end == node.begin + 1);
          }
        }
      }
      yes += expect ? 1 : 0;
    });
    CHECK(yes > 0);
  }
}

TEST_CASE("dyck grammar generates exactly the freely trivial words") {
  Alphabet const a = standard_alphabet(2);
  CnfGrammar     g = dyck_grammar(a);
  CHECK(grammar_issues(g).empty());
  CHECK(cyk_member(g, Word{}));
  CHECK(cyk_member(g, w(a, "a a' a a'")));
  CHECK(cyk_member(g, w(a, "a' b b' a")));
  CHECK_FALSE(cyk_member(g, w(a, "a b a' b'")));
  testing::for_each_word(a, 6, [&](Word const& u) {
    REQUIRE(cyk_member(g, u).has_value() == testing::is_trivial_in_free_group(u));
  });
}

TEST_CASE("shortest words") {
  ShortestWords one = shortest_words(read_grammar_string(kOneLoop));
  CHECK(one.K == 2);
  ShortestWords cube = shortest_words(read_grammar_string(kCube));
  CHECK(cube.K == 3);
  CHECK(shortest_words(read_grammar_string("alphabet a\nstart S\nrule S -> a\n")).K == 1);
  CHECK(shortest_words(dyck_grammar(standard_alphabet(3))).K == 2);

  // K bounds the shortest member of every variable's language
  for (CnfGrammar const& g : {read_grammar_string(kCube), dyck_grammar(standard_alphabet(1))}) {
    ShortestWords sw   = shortest_words(g);
    auto          lang = language(g, 6);
    for (std::size_t x = 0; x < g.variables.size(); ++x) {
      std::size_t best = 99;
      for (Word const& u : lang[x]) {
        best = std::min(best, u.size());
      }
      CHECK(sw.length[x] == best);
      CHECK(sw.length[x] <= sw.K);
    }
  }
}

TEST_CASE("triangulate a circuit") {
  CnfGrammar  g  = read_grammar_string(kOneLoop);
  RootedGraph rg = free_group_ball(1, 3);
  Word        u  = w(g.terminals, "a a'");
  auto        walk = trace_walk(rg.graph, rg.root, u);
  REQUIRE(walk);
  auto tree = cyk_member(g, u);
  REQUIRE(tree);
  auto edges = triangulate_circuit(g, *tree, *walk);
  REQUIRE(edges.size() == 3);
  CHECK(edges[0].from_pos == 0);
  CHECK(edges[0].to_pos == 2);
  CHECK_FALSE(edges[0].parent);
  CHECK(edges[1].parent == std::optional<std::size_t>(0));
  CHECK(edges[0].from_vertex == rg.root);
  CHECK(edges[0].to_vertex == rg.root);
  CHECK(edges[1].to_vertex == rg.graph.vertex("a"));

  // not a circuit
  CnfGrammar cube = read_grammar_string(kCube);
  Word       aaa  = w(cube.terminals, "a a a");
  auto       line = trace_walk(rg.graph, rg.root, aaa);
  REQUIRE(line);
  CHECK_THROWS_AS(triangulate_circuit(cube, *cyk_member(cube, aaa), *line), Error);
}

TEST_CASE("triangulation edges stay within K of each other on a cycle") {
  RootedGraph rg = cycle_graph(3);
  CnfGrammar  g  = read_grammar_string(kCube);
  Word        u  = w(g.terminals, "a a a");
  auto        walk = trace_walk(rg.graph, rg.root, u);
  auto        edges = triangulate_circuit(g, *cyk_member(g, u), *walk);
  CHECK(edges.size() == 5);
  for (auto const& e : edges) {
    CHECK(*distance(rg.graph, e.from_vertex, e.to_vertex) <= shortest_words(g).K);
  }
}
