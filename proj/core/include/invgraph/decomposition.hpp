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

// Verifiers for the tree-likeness conditions: tree decompositions with
// uniform diameter, strong tree decompositions (partitions whose quotient is
// a tree), cone separation and thinness of geodesic polygons.

#ifndef INVGRAPH_DECOMPOSITION_HPP_
#define INVGRAPH_DECOMPOSITION_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invgraph/graph.hpp"

namespace invgraph {

  struct TreeDecomposition {
    std::vector<std::string>                         nodes;
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
    std::vector<std::vector<Vertex>>                 bags;  // one per node
  };

  struct TreeDecompositionReport {
    bool tree = false;  // the node graph is a tree
    bool t1   = false;  // every vertex lies in some bag
    bool t2   = false;  // every edge lies in some bag
    bool t3   = false;  // bags containing a vertex span a subtree
    std::optional<Vertex> witness;       // first vertex failing T1 or T3
    std::optional<Edge>   edge_witness;  // first edge failing T2
    std::size_t           max_bag_diameter = 0;  // kUnreachable if unbounded

    bool valid() const noexcept {
      return tree && t1 && t2 && t3;
    }
  };

  // Throws Error when a bag names a vertex outside g or the node and bag
  // counts differ.
  TreeDecompositionReport verify_tree_decomposition(InverseGraph const&      g,
                                                    TreeDecomposition const& td);

  struct StrongTreePartition {
    std::vector<std::vector<Vertex>> blocks;
  };

  struct StrongTreeReport {
    // Γ/𝒫 as a simple graph: blocks joined when some edge of g joins them.
    std::vector<std::pair<std::size_t, std::size_t>> quotient_edges;
    bool        quotient_is_tree   = false;
    std::size_t max_block_diameter = 0;
    // Bags S'_t: block t together with the targets of edges leaving it,
    // over the quotient tree.
    TreeDecomposition       augmented;
    TreeDecompositionReport augmented_report;
    // δ(S'_t) ≤ max_block_diameter + 2 for every bag.
    bool augmented_within_bound = false;

    bool valid() const noexcept {
      return quotient_is_tree;
    }
  };

  // Throws Error if the blocks are empty, overlap, or miss a vertex.
  StrongTreeReport verify_strong_tree_decomposition(InverseGraph const&        g,
                                                    StrongTreePartition const& p);

  // Decomposition files: "bag t v1 v2 ...", "tree-edge t1 t2" for tree
  // decompositions, "block v1 v2 ..." for partitions, vertices by key. A
  // file holds one kind. Throws ParseError.
  struct DecompositionFile {
    std::optional<TreeDecomposition>   tree;
    std::optional<StrongTreePartition> partition;
  };

  DecompositionFile read_decomposition(std::istream& in, InverseGraph const& g);
  DecompositionFile load_decomposition(std::string const& path, InverseGraph const& g);
  void write_tree_decomposition(std::ostream& out, InverseGraph const& g, TreeDecomposition const& td);

  // No walk from the root to a vertex of the cone C(v) avoids D_δ(v).
  // The search runs in the ball; D_δ(v) must be exact there. Throws Error
  // when the root lies in D_δ(v), TrustError when ‖v‖ + δ exceeds the
  // trusted radius.
  bool cone_separation_check(RootedGraph const& rg, Vertex v, std::size_t delta);

  // Every vertex of every side is within delta of some vertex on another
  // side. Throws Error when a side is not a geodesic of g or the sides do
  // not close up.
  bool polygon_thin_check(InverseGraph const& g, std::vector<Walk> const& polygon, std::size_t delta);

}  // namespace invgraph

#endif  // INVGRAPH_DECOMPOSITION_HPP_
