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

#include "invgraph/cones.hpp"

#include <algorithm>

#include "invgraph/error.hpp"

namespace invgraph {

  EndCone end_cone(RootedGraph const& rg, Vertex v) {
    InverseGraph const& g = rg.graph;
    g.check_vertex(v);
    if (v == rg.root) {
      throw Error("the root has no end-cone");
    }
    auto const        norm    = norms(rg);
    std::size_t const trusted = trusted_radius(rg);
    std::size_t const n       = norm[v];
    if (n == kUnreachable) {
      throw Error("vertex " + g.key(v) + " is not reachable from the root");
    }
    if (n > trusted) {
      throw TrustError("norm of " + g.key(v) + " exceeds the trusted radius "
                       + std::to_string(trusted));
    }

    std::vector<Vertex> component{v};
    std::vector<char>   seen(g.num_vertices(), 0);
    seen[v]                 = 1;
    std::size_t const width = g.alphabet().size();
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (std::size_t c = 0; c < width; ++c) {
        Vertex t = g.target(component[i], Letter::from_code(c));
        if (t != kNoVertex && !seen[t] && norm[t] >= n) {
          seen[t] = 1;
          component.push_back(t);
        }
      }
    }
    std::sort(component.begin(), component.end());

    EndCone cone;
    Subgraph sub       = induced_subgraph(g, component, false);
    cone.cone_graph    = std::move(sub.graph);
    cone.to_base       = std::move(sub.to_original);
    cone.base_norm     = n;
    cone.anchor        = sub.from_original[v];
    cone.trusted_depth = trusted == kUnbounded ? kUnbounded : trusted - n;
    for (Vertex c = 0; c < cone.to_base.size(); ++c) {
      Vertex b = cone.to_base[c];
      cone.norms.push_back(norm[b]);
      if (norm[b] == n) {
        cone.frontier.push_back(c);
      }
      if (g.truncated(b)) {
        cone.complete = false;
      }
    }
    return cone;
  }

  EndCone EndCone::restricted(std::size_t depth) const {
    if (depth > trusted_depth) {
      throw TrustError("cone depth " + std::to_string(depth)
                       + " exceeds trusted depth " + std::to_string(trusted_depth));
    }
    std::vector<Vertex> keep;
    for (Vertex c = 0; c < cone_graph.num_vertices(); ++c) {
      if (norms[c] - base_norm <= depth) {
        keep.push_back(c);
      }
    }
    Subgraph sub = induced_subgraph(cone_graph, keep, false);
    EndCone  out;
    out.cone_graph    = std::move(sub.graph);
    out.base_norm     = base_norm;
    out.anchor        = sub.from_original[anchor];
    out.trusted_depth = depth;
    out.complete      = complete;
    for (Vertex c = 0; c < keep.size(); ++c) {
      out.to_base.push_back(to_base[keep[c]]);
      out.norms.push_back(norms[keep[c]]);
    }
    for (Vertex f : frontier) {
      out.frontier.push_back(sub.from_original[f]);
    }
    return out;
  }

  Subgraph cone(RootedGraph const& rg, Vertex v, std::size_t depth) {
    InverseGraph const& g = rg.graph;
    g.check_vertex(v);
    auto const        norm    = norms(rg);
    std::size_t const trusted = trusted_radius(rg);
    if (norm[v] == kUnreachable) {
      throw Error("vertex " + g.key(v) + " is not reachable from the root");
    }
    if (trusted != kUnbounded && norm[v] + depth > trusted) {
      throw TrustError("cone of " + g.key(v) + " to depth " + std::to_string(depth)
                       + " exceeds the trusted radius " + std::to_string(trusted));
    }
    auto const          from_v = distances_from(g, v);
    std::vector<Vertex> keep;
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      if (from_v[x] != kUnreachable && norm[x] <= norm[v] + depth
          && norm[x] == norm[v] + from_v[x]) {
        keep.push_back(x);
      }
    }
    return induced_subgraph(g, keep, false);
  }

  std::vector<Word> geodesic_words(RootedGraph const& rg, std::size_t max_length) {
    std::size_t const trusted = trusted_radius(rg);
    if (trusted != kUnbounded && trusted < max_length) {
      throw TrustError("geodesics of length " + std::to_string(max_length)
                       + " need trusted radius at least that large (have "
                       + std::to_string(trusted) + ")");
    }
    InverseGraph const& g    = rg.graph;
    auto const          norm = norms(rg);
    // Breadth-first over (word, endpoint); extending by a letter keeps a
    // geodesic exactly when the norm goes up by one.
    std::vector<std::pair<Word, Vertex>> layer{{Word{}, rg.root}};
    std::vector<Word>                    out{Word{}};
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<std::pair<Word, Vertex>> next;
      for (auto const& [w, end] : layer) {
        for (Letter a : g.alphabet().letters()) {
          Vertex t = g.target(end, a);
          if (t != kNoVertex && norm[t] == len) {
            Word extended = w;
            extended.push_back(a);
            out.push_back(extended);
            next.emplace_back(std::move(extended), t);
          }
        }
      }
      layer = std::move(next);
    }
    return out;
  }

}  // namespace invgraph
