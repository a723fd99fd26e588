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

// Path metric, disks, induced subgraphs and the trusted radius of a ball.

#ifndef INVGRAPH_METRIC_HPP_
#define INVGRAPH_METRIC_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "invgraph/graph.hpp"

namespace invgraph {

  inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
  inline constexpr std::size_t kUnbounded   = std::numeric_limits<std::size_t>::max();

  // Breadth-first distances from source; kUnreachable where undefined.
  std::vector<std::size_t> distances_from(InverseGraph const& g, Vertex source);

  std::optional<std::size_t> distance(InverseGraph const& g, Vertex u, Vertex v);

  // ‖x‖ = d(root, x) for every vertex.
  inline std::vector<std::size_t> norms(RootedGraph const& rg) {
    return distances_from(rg.graph, rg.root);
  }

  // Norms up to this value are exact in the infinite graph the ball was cut
  // from, and vertices of smaller norm have complete stars: the smallest norm
  // of a truncated vertex, kUnbounded when nothing is truncated.
  std::size_t trusted_radius(RootedGraph const& rg);

  struct Subgraph {
    InverseGraph        graph;
    std::vector<Vertex> to_original;
    // kNoVertex for vertices left out.
    std::vector<Vertex> from_original;
  };

  // Induced subgraph on keep (in the given order). Existing truncation marks
  // are copied; with mark_cut, vertices that lose an edge are marked too.
  Subgraph induced_subgraph(InverseGraph const&        g,
                            std::vector<Vertex> const& keep,
                            bool                       mark_cut);

  // D_n(center): induced on {x : d(center, x) ≤ n}, outer layer truncated
  // where edges leave the disk.
  InverseGraph disk(InverseGraph const& g, Vertex center, std::size_t n);

  // Connected components, each listed in breadth-first order from its
  // smallest vertex; components ordered by smallest vertex.
  std::vector<std::vector<Vertex>> connected_components(InverseGraph const& g);

  // δ(S) = max d(x, y) over x, y ∈ S, distances taken in g. kUnreachable if
  // some pair is disconnected; 0 for sets of size ≤ 1.
  std::size_t diameter_of(InverseGraph const& g, std::vector<Vertex> const& s);

}  // namespace invgraph

#endif  // INVGRAPH_METRIC_HPP_
