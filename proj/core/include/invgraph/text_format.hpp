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

// Line-based graph text format and DOT export.
//
//   # comment
//   alphabet a b c        positive letters, must precede edges
//   vertex v1             optional; edges create vertices on demand
//   edge v1 a v2          also adds the inverse edge (v2, a', v1)
//   root v1
//   truncated v3 v4       boundary marks
//
// Without a root line the first vertex is the root.

#ifndef INVGRAPH_TEXT_FORMAT_HPP_
#define INVGRAPH_TEXT_FORMAT_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "invgraph/graph.hpp"

namespace invgraph {

  // Splits a line into whitespace separated tokens, dropping '#' comments.
  std::vector<std::string> tokenize_line(std::string_view line);

  // Throws ParseError (with the offending line) on malformed lines,
  // determinism clashes and disconnected graphs.
  RootedGraph read_graph(std::istream& in);
  RootedGraph read_graph_string(std::string_view text);
  // Throws Error if the file cannot be opened.
  RootedGraph load_graph(std::string const& path);

  // Output is deterministic: vertices in index order, positive edges sorted.
  // read_graph(write_graph(g)) reproduces g up to isomorphism.
  void write_graph(std::ostream& out, RootedGraph const& rg);
  std::string to_text(RootedGraph const& rg);

  // One arrow per edge pair, drawn along the positive letter.
  void write_dot(std::ostream& out, RootedGraph const& rg, std::string_view name = "G");

}  // namespace invgraph

#endif  // INVGRAPH_TEXT_FORMAT_HPP_
