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

#include "invgraph/text_format.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "invgraph/error.hpp"

namespace invgraph {

  std::vector<std::string> tokenize_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string> tokens;
    std::istringstream       in{std::string(line)};
    std::string              token;
    while (in >> token) {
      tokens.push_back(token);
    }
    return tokens;
  }

  RootedGraph read_graph(std::istream& in) {
    std::optional<InverseGraph> graph;
    std::optional<std::string>  root_key;
    std::size_t                 root_line = 0;
    std::vector<std::pair<std::size_t, std::string>> truncated;

    std::string line;
    std::size_t number = 0;
    auto        need_graph = [&](std::string const& what) -> InverseGraph& {
      if (!graph) {
        throw ParseError(number, what + " before the alphabet line");
      }
      return *graph;
    };
    while (std::getline(in, line)) {
      ++number;
      auto tokens = tokenize_line(line);
      if (tokens.empty()) {
        continue;
      }
      std::string const& head = tokens[0];
      try {
        if (head == "alphabet") {
          if (graph) {
            throw ParseError(number, "second alphabet line");
          }
          graph.emplace(Alphabet(std::vector<std::string>(tokens.begin() + 1, tokens.end())));
        } else if (head == "vertex") {
          InverseGraph& g = need_graph("vertex");
          for (std::size_t i = 1; i < tokens.size(); ++i) {
            g.ensure_vertex(tokens[i]);
          }
        } else if (head == "edge") {
          InverseGraph& g = need_graph("edge");
          if (tokens.size() != 4) {
            throw ParseError(number, "expected 'edge SOURCE LETTER TARGET'");
          }
          Letter a = g.alphabet().parse_letter(tokens[2]);
          Vertex u = g.ensure_vertex(tokens[1]);
          Vertex v = g.ensure_vertex(tokens[3]);
          Vertex t = g.target(u, a);
          if (t != kNoVertex && t != v) {
            throw ParseError(number, "determinism violation: " + tokens[1] + " already has a "
                                         + tokens[2] + "-edge to " + g.key(t));
          }
          Vertex s = g.target(v, a.inverse());
          if (s != kNoVertex && s != u) {
            throw ParseError(number, "determinism violation: " + tokens[3] + " already has a "
                                         + g.alphabet().name(a.inverse()) + "-edge to "
                                         + g.key(s));
          }
          g.add_edge(u, a, v);
        } else if (head == "root") {
          need_graph("root");
          if (tokens.size() != 2) {
            throw ParseError(number, "expected 'root VERTEX'");
          }
          root_key  = tokens[1];
          root_line = number;
        } else if (head == "truncated") {
          need_graph("truncated");
          for (std::size_t i = 1; i < tokens.size(); ++i) {
            truncated.emplace_back(number, tokens[i]);
          }
        } else {
          throw ParseError(number, "unknown directive '" + head + "'");
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(number, e.what());
      }
    }
    if (!graph) {
      throw ParseError(0, "missing alphabet line");
    }
    InverseGraph& g = *graph;
    if (g.num_vertices() == 0) {
      throw ParseError(0, "graph has no vertices");
    }
    for (auto const& [where, key] : truncated) {
      auto v = g.find_vertex(key);
      if (!v) {
        throw ParseError(where, "unknown vertex '" + key + "'");
      }
      g.set_truncated(*v);
    }
    Vertex root = 0;
    if (root_key) {
      auto v = g.find_vertex(*root_key);
      if (!v) {
        throw ParseError(root_line, "unknown root vertex '" + *root_key + "'");
      }
      root = *v;
    }
    ValidationReport report = validate(g);
    if (!report.ok()) {
      throw ParseError(0, report.issues.front().detail);
    }
    return RootedGraph(std::move(g), root);
  }

  RootedGraph read_graph_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_graph(in);
  }

  RootedGraph load_graph(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    return read_graph(in);
  }

  void write_graph(std::ostream& out, RootedGraph const& rg) {
    InverseGraph const& g = rg.graph;
    out << "alphabet";
    for (auto const& name : g.alphabet().positive_names()) {
      out << ' ' << name;
    }
    out << '\n';
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      out << "vertex " << g.key(v) << '\n';
    }
    for (Edge const& e : g.positive_edges()) {
      out << "edge " << g.key(e.source) << ' ' << g.alphabet().name(e.label) << ' '
          << g.key(e.target) << '\n';
    }
    out << "root " << g.key(rg.root) << '\n';
    bool any = false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.truncated(v)) {
        out << (any ? " " : "truncated ") << g.key(v);
        any = true;
      }
    }
    if (any) {
      out << '\n';
    }
  }

  std::string to_text(RootedGraph const& rg) {
    std::ostringstream out;
    write_graph(out, rg);
    return out.str();
  }

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }
  }  // namespace

  void write_dot(std::ostream& out, RootedGraph const& rg, std::string_view name) {
    InverseGraph const& g = rg.graph;
    out << "digraph " << quoted(std::string(name)) << " {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      out << "  " << v << " [label=" << quoted(g.key(v));
      if (v == rg.root) {
        out << ", shape=doublecircle";
      }
      if (g.truncated(v)) {
        out << ", style=dashed";
      }
      out << "];\n";
    }
    for (Edge const& e : g.positive_edges()) {
      out << "  " << e.source << " -> " << e.target
          << " [label=" << quoted(g.alphabet().name(e.label)) << "];\n";
    }
    out << "}\n";
  }

}  // namespace invgraph
