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

// Inverse graphs: finite labelled digraphs over an involutive alphabet whose
// edges come in pairs (u, a, v), (v, a⁻¹, u), with at most one edge per
// vertex and letter, and connected.
//
// Infinite graphs only ever appear here as finite balls. Vertices on the
// boundary of a ball carry a truncation mark: their star may be incomplete,
// and every operation that could be falsified by unseen vertices consults
// these marks.

#ifndef INVGRAPH_GRAPH_HPP_
#define INVGRAPH_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "invgraph/alphabet.hpp"

namespace invgraph {

  using Vertex = std::uint32_t;

  inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

  struct Edge {
    Vertex source = kNoVertex;
    Letter label;
    Vertex target = kNoVertex;

    auto operator<=>(Edge const&) const = default;
  };

  class InverseGraph {
   public:
    InverseGraph() = default;
    explicit InverseGraph(Alphabet alphabet);

    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }

    std::size_t num_vertices() const noexcept {
      return keys_.size();
    }
    // Number of directed edges, each edge and its inverse counted once.
    std::size_t num_arcs() const noexcept {
      return arcs_.size();
    }

    // An empty key becomes "v<index>". Throws Error on a duplicate key.
    Vertex add_vertex(std::string key = {});
    // Returns the vertex with this key, creating it if needed.
    Vertex ensure_vertex(std::string const& key);

    std::optional<Vertex> find_vertex(std::string_view key) const;
    // Throws Error for unknown keys.
    Vertex vertex(std::string_view key) const;
    std::string const& key(Vertex v) const;

    // Adds (u, a, v) and (v, a⁻¹, u).
    void add_edge(Vertex u, Letter a, Vertex v);
    // Adds only (u, a, v). Used by builders that may produce digraphs which
    // are not involutive; validate() reports the missing inverses.
    void add_arc(Vertex u, Letter a, Vertex v);

    // Target of the a-edge leaving u, kNoVertex if there is none.
    Vertex target(Vertex u, Letter a) const {
      return table_[static_cast<std::size_t>(u) * alphabet_.size() + a.code()];
    }
    bool has_edge(Vertex u, Letter a) const {
      return target(u, a) != kNoVertex;
    }
    // Number of edges leaving v.
    std::size_t degree(Vertex v) const;

    void set_truncated(Vertex v, bool value = true);
    bool truncated(Vertex v) const {
      return truncated_[v] != 0;
    }
    bool has_truncation() const noexcept;

    // Every stored arc, in insertion order.
    std::vector<Edge> const& arcs() const noexcept {
      return arcs_;
    }
    // Arcs rejected because their (source, label) slot was already taken.
    std::vector<Edge> const& clashes() const noexcept {
      return clashes_;
    }
    // Arcs with a positive label, sorted.
    std::vector<Edge> positive_edges() const;

    void check_vertex(Vertex v) const;

   private:
    Alphabet                                alphabet_;
    std::vector<std::string>                keys_;
    std::unordered_map<std::string, Vertex> key_index_;
    std::vector<Vertex>                     table_;
    std::vector<Edge>                       arcs_;
    std::vector<Edge>                       clashes_;
    std::vector<char>                       truncated_;
  };

  struct RootedGraph {
    InverseGraph graph;
    Vertex       root = 0;

    RootedGraph() = default;
    // Throws Error if root is not a vertex of graph.
    RootedGraph(InverseGraph g, Vertex r);
  };

  // A walk: the start vertex, its label and the visited vertices
  // (vertices.size() == label.size() + 1).
  struct Walk {
    Vertex              start = kNoVertex;
    Word                label;
    std::vector<Vertex> vertices;

    Vertex end() const {
      return vertices.back();
    }
    std::size_t length() const noexcept {
      return label.size();
    }
    bool is_circuit() const {
      return vertices.front() == vertices.back();
    }
  };

  enum class Violation {
    kEmpty,
    kMissingInverse,
    kDeterminismClash,
    kDisconnected,
    // The letter encoding makes a = a⁻¹ impossible, so this never fires for
    // graphs built through this API; kept so reports name every invariant.
    kSelfInverse,
  };

  struct ValidationIssue {
    Violation   kind;
    std::string detail;
  };

  struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const noexcept {
      return issues.empty();
    }
    bool has(Violation kind) const;
    std::string to_string() const;
  };

  ValidationReport validate(InverseGraph const& g);

  // Endpoint of the walk labelled w from start, nullopt if some step has no
  // edge. Throws Error if start is not a vertex, AlphabetError on letters
  // outside the alphabet.
  std::optional<Vertex> trace(InverseGraph const& g, Vertex start, Word const& w);

  // As trace(), returning the whole walk.
  std::optional<Walk> trace_walk(InverseGraph const& g, Vertex start, Word const& w);

  struct TraceResult {
    std::optional<Vertex> end;
    // Some visited vertex (start included) is truncated.
    bool touched_truncation = false;
    // The walk stopped at a truncated vertex lacking the needed edge, so the
    // answer is unknown rather than undefined.
    bool blocked_by_truncation = false;
  };

  TraceResult trace_checked(InverseGraph const& g, Vertex start, Word const& w);

  // Membership in L(graph, root): w labels a circuit at the root.
  bool accepts(RootedGraph const& rg, Word const& w);

  // Membership in D(g, v): w reduces to 1 and labels a walk from v.
  bool is_dyck_at(InverseGraph const& g, Vertex v, Word const& w);

  // Vertex indices reachable from v, in breadth-first order.
  std::vector<Vertex> reachable(InverseGraph const& g, Vertex v);

}  // namespace invgraph

#endif  // INVGRAPH_GRAPH_HPP_
