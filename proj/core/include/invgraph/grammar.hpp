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

// Context-free grammars in Chomsky normal form over an involutive terminal
// alphabet, CYK membership, the shortest-word constant K and triangulation
// of circuits by parse trees.

#ifndef INVGRAPH_GRAMMAR_HPP_
#define INVGRAPH_GRAMMAR_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invgraph/alphabet.hpp"
#include "invgraph/graph.hpp"

namespace invgraph {

  struct BinaryRule {
    std::size_t lhs   = 0;
    std::size_t left  = 0;
    std::size_t right = 0;
  };

  struct TerminalRule {
    std::size_t lhs = 0;
    Letter      letter;
  };

  struct CnfGrammar {
    Alphabet                  terminals;
    std::vector<std::string>  variables;
    std::size_t               start = 0;
    std::vector<BinaryRule>   binary;
    std::vector<TerminalRule> terminal;
    bool                      accepts_empty = false;

    // Index of a variable, creating it if needed.
    std::size_t ensure_variable(std::string const& name);
    std::optional<std::size_t> find_variable(std::string_view name) const;
  };

  // Empty when g is in CNF (the start symbol never occurs on a right-hand
  // side) and every variable is reachable from the start and productive.
  std::vector<std::string> grammar_issues(CnfGrammar const& g);

  // Line format:
  //   alphabet a b
  //   start S
  //   rule S -> A B | C D
  //   rule A -> a'
  //   epsilon
  // A one-symbol right-hand side is a terminal letter, a two-symbol one a
  // pair of variables. Throws ParseError, including for grammars that fail
  // grammar_issues (line 0).
  CnfGrammar read_grammar(std::istream& in);
  CnfGrammar read_grammar_string(std::string_view text);
  CnfGrammar load_grammar(std::string const& path);
  void       write_grammar(std::ostream& out, CnfGrammar const& g);

  // A derivation tree. nodes[0] is the root; a node with children derives
  // through a binary rule, a leaf through a terminal rule.
  struct ParseTree {
    struct Node {
      std::size_t variable = 0;
      std::size_t begin    = 0;
      std::size_t end      = 0;  // span w[begin, end)
      std::optional<std::size_t> left;
      std::optional<std::size_t> right;
    };
    std::vector<Node> nodes;  // empty for the derivation S -> ε
  };

  std::optional<ParseTree> cyk_member(CnfGrammar const& g, Word const& w);

  struct ShortestWords {
    std::vector<std::size_t> length;  // min |u| over u ∈ L(X), per variable
    std::size_t              K = 0;   // max over variables
  };

  // Throws Error if some variable is unproductive.
  ShortestWords shortest_words(CnfGrammar const& g);

  // Symmetric Dyck words over the whole involutive alphabet, ε included.
  // For every letter l: L_l -> l, M_l -> l⁻¹ | D M_l, D -> L_l M_l | D D,
  // and S has the rules of D. K = 2.
  CnfGrammar dyck_grammar(Alphabet const& alphabet);

  struct TriangulationEdge {
    std::size_t                from_pos = 0;
    std::size_t                to_pos   = 0;
    std::size_t                variable = 0;
    std::optional<std::size_t> parent;  // index into the returned list
    Vertex                     from_vertex = kNoVertex;
    Vertex                     to_vertex   = kNoVertex;
  };

  // One V-edge per node of the parse tree, in preorder, joining the circuit
  // vertices at the ends of the node's span. Throws Error when the tree does
  // not derive the circuit label or the walk is not a circuit.
  std::vector<TriangulationEdge> triangulate_circuit(CnfGrammar const& g,
                                                     ParseTree const&  tree,
                                                     Walk const&       circuit);

}  // namespace invgraph

#endif  // INVGRAPH_GRAMMAR_HPP_
