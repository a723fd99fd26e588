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

#include "invgraph/grammar.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "invgraph/error.hpp"
#include "invgraph/text_format.hpp"

namespace invgraph {

  std::size_t CnfGrammar::ensure_variable(std::string const& name) {
    if (auto v = find_variable(name)) {
      return *v;
    }
    variables.push_back(name);
    return variables.size() - 1;
  }

  std::optional<std::size_t> CnfGrammar::find_variable(std::string_view name) const {
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (variables[i] == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::vector<std::string> grammar_issues(CnfGrammar const& g) {
    std::vector<std::string> issues;
    std::size_t const        n = g.variables.size();
    if (g.start >= n) {
      issues.push_back("start symbol is not a variable");
      return issues;
    }
    for (BinaryRule const& r : g.binary) {
      if (r.lhs >= n || r.left >= n || r.right >= n) {
        issues.push_back("rule refers to an unknown variable");
        return issues;
      }
      if (r.left == g.start || r.right == g.start) {
        issues.push_back("start symbol " + g.variables[g.start]
                         + " occurs on the right-hand side of a rule for "
                         + g.variables[r.lhs]);
      }
    }
    for (TerminalRule const& r : g.terminal) {
      if (r.lhs >= n) {
        issues.push_back("rule refers to an unknown variable");
        return issues;
      }
      if (!g.terminals.contains(r.letter)) {
        issues.push_back("terminal outside the alphabet in a rule for " + g.variables[r.lhs]);
      }
    }

    std::vector<char> productive(n, 0);
    for (TerminalRule const& r : g.terminal) {
      productive[r.lhs] = 1;
    }
    if (g.accepts_empty) {
      productive[g.start] = 1;
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (BinaryRule const& r : g.binary) {
        if (!productive[r.lhs] && productive[r.left] && productive[r.right]) {
          productive[r.lhs] = 1;
          changed           = true;
        }
      }
    }
    std::vector<char>        reached(n, 0);
    std::vector<std::size_t> stack{g.start};
    reached[g.start] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (BinaryRule const& r : g.binary) {
        if (r.lhs != x || !productive[r.left] || !productive[r.right]) {
          continue;
        }
        for (std::size_t y : {r.left, r.right}) {
          if (!reached[y]) {
            reached[y] = 1;
            stack.push_back(y);
          }
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!productive[x]) {
        issues.push_back("variable " + g.variables[x] + " is not productive");
      } else if (!reached[x]) {
        issues.push_back("variable " + g.variables[x] + " is not reachable from the start");
      }
    }
    return issues;
  }

  CnfGrammar read_grammar(std::istream& in) {
    CnfGrammar                 g;
    bool                       have_alphabet = false;
    std::optional<std::string> start;
    std::string                line;
    std::size_t                number = 0;
    while (std::getline(in, line)) {
      ++number;
      auto tokens = tokenize_line(line);
      if (tokens.empty()) {
        continue;
      }
      try {
        if (tokens[0] == "alphabet") {
          if (have_alphabet) {
            throw ParseError(number, "second alphabet line");
          }
          g.terminals   = Alphabet(std::vector<std::string>(tokens.begin() + 1, tokens.end()));
          have_alphabet = true;
        } else if (tokens[0] == "start") {
          if (tokens.size() != 2) {
            throw ParseError(number, "expected 'start VARIABLE'");
          }
          start = tokens[1];
        } else if (tokens[0] == "epsilon") {
          g.accepts_empty = true;
        } else if (tokens[0] == "rule") {
          if (!have_alphabet) {
            throw ParseError(number, "rule before the alphabet line");
          }
          if (tokens.size() < 4 || tokens[2] != "->") {
            throw ParseError(number, "expected 'rule X -> Y Z' or 'rule X -> a'");
          }
          std::size_t lhs = g.ensure_variable(tokens[1]);
          std::vector<std::string> alternative;
          auto flush = [&] {
            if (alternative.size() == 1) {
              g.terminal.push_back({lhs, g.terminals.parse_letter(alternative[0])});
            } else if (alternative.size() == 2) {
              g.binary.push_back(
                  {lhs, g.ensure_variable(alternative[0]), g.ensure_variable(alternative[1])});
            } else {
              throw ParseError(number, "a right-hand side has one terminal or two variables");
            }
            alternative.clear();
          };
          for (std::size_t i = 3; i < tokens.size(); ++i) {
            if (tokens[i] == "|") {
              flush();
            } else {
              alternative.push_back(tokens[i]);
            }
          }
          flush();
        } else {
          throw ParseError(number, "unknown directive '" + tokens[0] + "'");
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(number, e.what());
      }
    }
    if (!have_alphabet) {
      throw ParseError(0, "missing alphabet line");
    }
    if (!start) {
      throw ParseError(0, "missing start line");
    }
    auto s = g.find_variable(*start);
    if (!s) {
      throw ParseError(0, "start variable " + *start + " has no rules");
    }
    g.start = *s;
    if (auto issues = grammar_issues(g); !issues.empty()) {
      throw ParseError(0, issues.front());
    }
    return g;
  }

  CnfGrammar read_grammar_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_grammar(in);
  }

  CnfGrammar load_grammar(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    return read_grammar(in);
  }

  void write_grammar(std::ostream& out, CnfGrammar const& g) {
    out << "alphabet";
    for (auto const& name : g.terminals.positive_names()) {
      out << ' ' << name;
    }
    out << "\nstart " << g.variables[g.start] << '\n';
    if (g.accepts_empty) {
      out << "epsilon\n";
    }
    for (BinaryRule const& r : g.binary) {
      out << "rule " << g.variables[r.lhs] << " -> " << g.variables[r.left] << ' '
          << g.variables[r.right] << '\n';
    }
    for (TerminalRule const& r : g.terminal) {
      out << "rule " << g.variables[r.lhs] << " -> " << g.terminals.name(r.letter) << '\n';
    }
  }

  std::optional<ParseTree> cyk_member(CnfGrammar const& g, Word const& w) {
    check_word(g.terminals, w);
    std::size_t const n = w.size();
    if (n == 0) {
      return g.accepts_empty ? std::optional<ParseTree>(ParseTree{}) : std::nullopt;
    }
    std::size_t const nv = g.variables.size();
    // Cell (i, len, X): X derives w[i, i + len). back holds the rule index
    // and, for binary rules, the length of the left part.
    struct Back {
      std::size_t rule  = 0;
      std::size_t split = 0;
      bool        set   = false;
    };
    auto cell = [&](std::size_t i, std::size_t len, std::size_t x) {
      return (i * (n + 1) + len) * nv + x;
    };
    std::vector<Back> table((n * (n + 1) + n + 1) * nv);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < g.terminal.size(); ++r) {
        Back& b = table[cell(i, 1, g.terminal[r].lhs)];
        if (g.terminal[r].letter == w[i] && !b.set) {
          b = {r, 0, true};
        }
      }
    }
    for (std::size_t len = 2; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        for (std::size_t split = 1; split < len; ++split) {
          for (std::size_t r = 0; r < g.binary.size(); ++r) {
            BinaryRule const& rule = g.binary[r];
            Back&             b    = table[cell(i, len, rule.lhs)];
            if (!b.set && table[cell(i, split, rule.left)].set
                && table[cell(i + split, len - split, rule.right)].set) {
              b = {r, split, true};
            }
          }
        }
      }
    }
    if (!table[cell(0, n, g.start)].set) {
      return std::nullopt;
    }
    ParseTree tree;
    std::function<std::size_t(std::size_t, std::size_t, std::size_t)> build =
        [&](std::size_t x, std::size_t i, std::size_t len) -> std::size_t {
      std::size_t const id = tree.nodes.size();
      tree.nodes.push_back({x, i, i + len, std::nullopt, std::nullopt});
      if (len > 1) {
        Back const        b    = table[cell(i, len, x)];
        BinaryRule const& rule = g.binary[b.rule];
        std::size_t       l    = build(rule.left, i, b.split);
        std::size_t       r    = build(rule.right, i + b.split, len - b.split);
        tree.nodes[id].left    = l;
        tree.nodes[id].right   = r;
      }
      return id;
    };
    build(g.start, 0, n);
    return tree;
  }

  ShortestWords shortest_words(CnfGrammar const& g) {
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    ShortestWords         out;
    out.length.assign(g.variables.size(), kInf);
    for (TerminalRule const& r : g.terminal) {
      out.length[r.lhs] = 1;
    }
    if (g.accepts_empty) {
      out.length[g.start] = 0;
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (BinaryRule const& r : g.binary) {
        if (out.length[r.left] == kInf || out.length[r.right] == kInf) {
          continue;
        }
        std::size_t candidate = out.length[r.left] + out.length[r.right];
        if (candidate < out.length[r.lhs]) {
          out.length[r.lhs] = candidate;
          changed           = true;
        }
      }
    }
    for (std::size_t x = 0; x < g.variables.size(); ++x) {
      if (out.length[x] == kInf) {
        throw Error("variable " + g.variables[x] + " is not productive");
      }
      out.K = std::max(out.K, out.length[x]);
    }
    return out;
  }

  CnfGrammar dyck_grammar(Alphabet const& alphabet) {
    CnfGrammar g;
    g.terminals       = alphabet;
    g.start           = g.ensure_variable("S");
    std::size_t d     = g.ensure_variable("D");
    g.accepts_empty   = true;
    for (Letter l : alphabet.letters()) {
      std::size_t open  = g.ensure_variable("L_" + alphabet.name(l));
      std::size_t close = g.ensure_variable("M_" + alphabet.name(l));
      g.terminal.push_back({open, l});
      g.terminal.push_back({close, l.inverse()});
      g.binary.push_back({close, d, close});
      g.binary.push_back({d, open, close});
      g.binary.push_back({g.start, open, close});
    }
    g.binary.push_back({d, d, d});
    g.binary.push_back({g.start, d, d});
    return g;
  }

  std::vector<TriangulationEdge> triangulate_circuit(CnfGrammar const& g,
                                                     ParseTree const&  tree,
                                                     Walk const&       circuit) {
    Word const& w = circuit.label;
    if (circuit.vertices.size() != w.size() + 1 || !circuit.is_circuit()) {
      throw Error("triangulation needs a circuit");
    }
    std::vector<TriangulationEdge> edges;
    if (tree.nodes.empty()) {
      if (!w.empty() || !g.accepts_empty) {
        throw Error("empty parse tree for a nonempty circuit");
      }
      return edges;
    }
    ParseTree::Node const& root = tree.nodes[0];
    if (root.variable != g.start || root.begin != 0 || root.end != w.size()) {
      throw Error("parse tree root does not span the circuit from the start symbol");
    }
    std::function<void(std::size_t, std::optional<std::size_t>)> visit =
        [&](std::size_t id, std::optional<std::size_t> parent) {
          if (id >= tree.nodes.size()) {
            throw Error("parse tree refers to a missing node");
          }
          ParseTree::Node const& node = tree.nodes[id];
          if (node.begin >= node.end || node.end > w.size()) {
            throw Error("parse tree node has an invalid span");
          }
          std::size_t const here = edges.size();
          edges.push_back({node.begin, node.end, node.variable, parent,
                           circuit.vertices[node.begin], circuit.vertices[node.end]});
          if (!node.left && !node.right) {
            bool ok = node.end == node.begin + 1
                      && std::any_of(g.terminal.begin(), g.terminal.end(),
                                     [&](TerminalRule const& r) {
                                       return r.lhs == node.variable
                                              && r.letter == w[node.begin];
                                     });
            if (!ok) {
              throw Error("parse tree leaf does not match the circuit label");
            }
            return;
          }
          if (!node.left || !node.right) {
            throw Error("parse tree node with a single child");
          }
          ParseTree::Node const& l  = tree.nodes.at(*node.left);
          ParseTree::Node const& r  = tree.nodes.at(*node.right);
          bool                   ok = l.begin == node.begin && l.end == r.begin
                    && r.end == node.end
                    && std::any_of(g.binary.begin(), g.binary.end(), [&](BinaryRule const& b) {
                         return b.lhs == node.variable && b.left == l.variable
                                && b.right == r.variable;
                       });
          if (!ok) {
            throw Error("parse tree node does not follow a rule of the grammar");
          }
          visit(*node.left, here);
          visit(*node.right, here);
        };
    visit(0, std::nullopt);
    return edges;
  }

}  // namespace invgraph
