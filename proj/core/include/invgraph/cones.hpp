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

// End-cones, geodesic cones and geodesic words of a rooted graph.

#ifndef INVGRAPH_CONES_HPP_
#define INVGRAPH_CONES_HPP_

#include <cstddef>
#include <vector>

#include "invgraph/graph.hpp"
#include "invgraph/metric.hpp"

namespace invgraph {

  // The end-cone at v: the connected component containing v of the graph
  // with the disk of radius ‖v‖ - 1 around the root removed, together with
  // its frontier (the component's vertices of norm exactly ‖v‖).
  struct EndCone {
    InverseGraph             cone_graph;
    std::vector<Vertex>      frontier;  // cone_graph indices, ascending
    std::size_t              base_norm = 0;
    Vertex                   anchor    = kNoVertex;  // v, as a cone_graph index
    std::vector<Vertex>      to_base;                // cone_graph -> base vertex
    std::vector<std::size_t> norms;                  // base norm per cone vertex
    // Relative depth up to which the cone agrees with the infinite graph:
    // trusted_radius(base) - base_norm, or kUnbounded.
    std::size_t trusted_depth = kUnbounded;
    // No vertex of the component is truncated.
    bool complete = true;

    // The part of the cone with norm ≤ base_norm + depth, frontier kept.
    // Throws TrustError when depth exceeds trusted_depth.
    EndCone restricted(std::size_t depth) const;
  };

  // Throws Error when v is the root, TrustError when ‖v‖ itself is beyond the
  // trusted radius.
  EndCone end_cone(RootedGraph const& rg, Vertex v);

  // C(v): induced on {x : ‖x‖ = ‖v‖ + d(v, x)}, limited to
  // ‖x‖ ≤ ‖v‖ + depth. Throws TrustError if that exceeds the trusted radius.
  Subgraph cone(RootedGraph const& rg, Vertex v, std::size_t depth);

  // Labels w with |w| ≤ max_length of geodesics from the root, in shortlex
  // order. Throws TrustError when the trusted radius is below max_length.
  std::vector<Word> geodesic_words(RootedGraph const& rg, std::size_t max_length);

}  // namespace invgraph

#endif  // INVGRAPH_CONES_HPP_
