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

#include "invgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "invgraph/error.hpp"

namespace invgraph {

  InverseGraph::InverseGraph(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  Vertex InverseGraph::add_vertex(std::string key) {
    auto const v = static_cast<Vertex>(keys_.size());
    if (key.empty()) {
      key = "v" + std::to_string(v);
    }
    if (!key_index_.emplace(key, v).second) {
      throw Error("duplicate vertex key '" + key + "'");
    }
    keys_.push_back(std::move(key));
    table_.resize(table_.size() + alphabet_.size(), kNoVertex);
    truncated_.push_back(0);
    return v;
  }

  Vertex InverseGraph::ensure_vertex(std::string const& key) {
    if (auto v = find_vertex(key)) {
      return *v;
    }
    return add_vertex(key);
  }

  std::optional<Vertex> InverseGraph::find_vertex(std::string_view key) const {
    auto it = key_index_.find(std::string(key));
    if (it == key_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Vertex InverseGraph::vertex(std::string_view key) const {
    if (auto v = find_vertex(key)) {
      return *v;
    }
    throw Error("unknown vertex '" + std::string(key) + "'");
  }

  std::string const& InverseGraph::key(Vertex v) const {
    check_vertex(v);
    return keys_[v];
  }

  void InverseGraph::check_vertex(Vertex v) const {
    if (v >= keys_.size()) {
      throw Error("vertex index " + std::to_string(v) + " out of range");
    }
  }

  void InverseGraph::add_arc(Vertex u, Letter a, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (!alphabet_.contains(a)) {
      throw AlphabetError("edge label outside the alphabet");
    }
    Vertex& slot = table_[static_cast<std::size_t>(u) * alphabet_.size() + a.code()];
    if (slot == v) {
      return;
    }
    if (slot != kNoVertex) {
      clashes_.push_back({u, a, v});
      return;
    }
    slot = v;
    arcs_.push_back({u, a, v});
  }

  void InverseGraph::add_edge(Vertex u, Letter a, Vertex v) {
    add_arc(u, a, v);
    add_arc(v, a.inverse(), u);
  }

  std::size_t InverseGraph::degree(Vertex v) const {
    check_vertex(v);
    auto first = table_.begin() + static_cast<std::ptrdiff_t>(v * alphabet_.size());
    return static_cast<std::size_t>(std::count_if(
        first, first + static_cast<std::ptrdiff_t>(alphabet_.size()),
        [](Vertex t) { return t != kNoVertex; }));
  }

  void InverseGraph::set_truncated(Vertex v, bool value) {
    check_vertex(v);
    truncated_[v] = value ? 1 : 0;
  }

  bool InverseGraph::has_truncation() const noexcept {
    return std::any_of(truncated_.begin(), truncated_.end(), [](char c) { return c != 0; });
  }

  std::vector<Edge> InverseGraph::positive_edges() const {
    std::vector<Edge> out;
    for (Edge const& e : arcs_) {
      if (e.label.is_positive()) {
        out.push_back(e);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  RootedGraph::RootedGraph(InverseGraph g, Vertex r) : graph(std::move(g)), root(r) {
    graph.check_vertex(root);
  }

  bool ValidationReport::has(Violation kind) const {
    return std::any_of(issues.begin(), issues.end(), [kind](ValidationIssue const& i) {
      return i.kind == kind;
    });
  }

  std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (ValidationIssue const& issue : issues) {
      out << issue.detail << '\n';
    }
    return out.str();
  }

  namespace {
    std::string describe(InverseGraph const& g, Edge const& e) {
      return "(" + g.key(e.source) + ", " + g.alphabet().name(e.label) + ", "
             + g.key(e.target) + ")";
    }
  }  // namespace

  ValidationReport validate(InverseGraph const& g) {
    ValidationReport report;
    if (g.num_vertices() == 0) {
      report.issues.push_back({Violation::kEmpty, "graph has no vertices"});
      return report;
    }
    for (Edge const& e : g.arcs()) {
      if (e.label == e.label.inverse()) {
        report.issues.push_back(
            {Violation::kSelfInverse, "edge " + describe(g, e) + " is its own inverse"});
      }
      if (g.target(e.target, e.label.inverse()) != e.source) {
        report.issues.push_back({Violation::kMissingInverse,
                                 "edge " + describe(g, e) + " has no inverse edge"});
      }
    }
    for (Edge const& e : g.clashes()) {
      Edge const kept{e.source, e.label, g.target(e.source, e.label)};
      report.issues.push_back({Violation::kDeterminismClash,
                               "edges " + describe(g, kept) + " and " + describe(g, e)
                                   + " share source and label"});
    }
    // Connectivity ignores edge direction so that a missing inverse does not
    // also show up as a disconnection.
    std::vector<std::vector<Vertex>> neighbours(g.num_vertices());
    for (Edge const& e : g.arcs()) {
      neighbours[e.source].push_back(e.target);
      neighbours[e.target].push_back(e.source);
    }
    std::vector<char>  seen(g.num_vertices(), 0);
    std::deque<Vertex> queue{0};
    seen[0]           = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : neighbours[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          queue.push_back(w);
        }
      }
    }
    if (count != g.num_vertices()) {
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!seen[v]) {
          report.issues.push_back({Violation::kDisconnected,
                                   "vertex " + g.key(v) + " is not connected to "
                                       + g.key(0)});
          break;
        }
      }
    }
    return report;
  }

  TraceResult trace_checked(InverseGraph const& g, Vertex start, Word const& w) {
    g.check_vertex(start);
    check_word(g.alphabet(), w);
    TraceResult result;
    Vertex      v             = start;
    result.touched_truncation = g.truncated(v);
    for (Letter a : w) {
      Vertex next = g.target(v, a);
      if (next == kNoVertex) {
        result.blocked_by_truncation = g.truncated(v);
        return result;
      }
      v = next;
      result.touched_truncation = result.touched_truncation || g.truncated(v);
    }
    result.end = v;
    return result;
  }

  std::optional<Vertex> trace(InverseGraph const& g, Vertex start, Word const& w) {
    g.check_vertex(start);
    check_word(g.alphabet(), w);
    Vertex v = start;
    for (Letter a : w) {
      v = g.target(v, a);
      if (v == kNoVertex) {
        return std::nullopt;
      }
    }
    return v;
  }

  std::optional<Walk> trace_walk(InverseGraph const& g, Vertex start, Word const& w) {
    g.check_vertex(start);
    check_word(g.alphabet(), w);
    Walk walk{start, w, {start}};
    walk.vertices.reserve(w.size() + 1);
    for (Letter a : w) {
      Vertex next = g.target(walk.vertices.back(), a);
      if (next == kNoVertex) {
        return std::nullopt;
      }
      walk.vertices.push_back(next);
    }
    return walk;
  }

  bool accepts(RootedGraph const& rg, Word const& w) {
    auto end = trace(rg.graph, rg.root, w);
    return end && *end == rg.root;
  }

  bool is_dyck_at(InverseGraph const& g, Vertex v, Word const& w) {
    return free_reduce(w).empty() && trace(g, v, w).has_value();
  }

  std::vector<Vertex> reachable(InverseGraph const& g, Vertex v) {
    g.check_vertex(v);
    std::vector<char>   seen(g.num_vertices(), 0);
    std::vector<Vertex> order{v};
    seen[v]                 = 1;
    std::size_t const width = g.alphabet().size();
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t c = 0; c < width; ++c) {
        Vertex t = g.target(order[i], Letter::from_code(c));
        if (t != kNoVertex && !seen[t]) {
          seen[t] = 1;
          order.push_back(t);
        }
      }
    }
    return order;
  }

}  // namespace invgraph
