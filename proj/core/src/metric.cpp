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

#include "invgraph/metric.hpp"

#include <algorithm>

#include "invgraph/error.hpp"

namespace invgraph {

  std::vector<std::size_t> distances_from(InverseGraph const& g, Vertex source) {
    g.check_vertex(source);
    std::vector<std::size_t> dist(g.num_vertices(), kUnreachable);
    std::vector<Vertex>      queue{source};
    dist[source]            = 0;
    std::size_t const width = g.alphabet().size();
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex u = queue[i];
      for (std::size_t c = 0; c < width; ++c) {
        Vertex t = g.target(u, Letter::from_code(c));
        if (t != kNoVertex && dist[t] == kUnreachable) {
          dist[t] = dist[u] + 1;
          queue.push_back(t);
        }
      }
    }
    return dist;
  }

  std::optional<std::size_t> distance(InverseGraph const& g, Vertex u, Vertex v) {
    g.check_vertex(v);
    std::size_t d = distances_from(g, u)[v];
    if (d == kUnreachable) {
      return std::nullopt;
    }
    return d;
  }

  std::size_t trusted_radius(RootedGraph const& rg) {
    auto const  norm   = norms(rg);
    std::size_t radius = kUnbounded;
    for (Vertex v = 0; v < rg.graph.num_vertices(); ++v) {
      if (rg.graph.truncated(v) && norm[v] != kUnreachable) {
        radius = std::min(radius, norm[v]);
      }
    }
    return radius;
  }

  Subgraph induced_subgraph(InverseGraph const&        g,
                            std::vector<Vertex> const& keep,
                            bool                       mark_cut) {
    Subgraph sub{InverseGraph(g.alphabet()), keep, std::vector<Vertex>(g.num_vertices(), kNoVertex)};
    for (Vertex v : keep) {
      g.check_vertex(v);
      if (sub.from_original[v] != kNoVertex) {
        throw Error("induced_subgraph: vertex listed twice");
      }
      sub.from_original[v] = sub.graph.add_vertex(g.key(v));
      if (g.truncated(v)) {
        sub.graph.set_truncated(sub.from_original[v]);
      }
    }
    std::size_t const width = g.alphabet().size();
    for (Vertex v : keep) {
      for (std::size_t c = 0; c < width; ++c) {
        Letter a = Letter::from_code(c);
        Vertex t = g.target(v, a);
        if (t == kNoVertex) {
          continue;
        }
        if (sub.from_original[t] == kNoVertex) {
          if (mark_cut) {
            sub.graph.set_truncated(sub.from_original[v]);
          }
          continue;
        }
        sub.graph.add_arc(sub.from_original[v], a, sub.from_original[t]);
      }
    }
    return sub;
  }

  InverseGraph disk(InverseGraph const& g, Vertex center, std::size_t n) {
    auto const          dist = distances_from(g, center);
    std::vector<Vertex> keep;
    for (Vertex v : reachable(g, center)) {
      if (dist[v] <= n) {
        keep.push_back(v);
      }
    }
    return induced_subgraph(g, keep, true).graph;
  }

  std::vector<std::vector<Vertex>> connected_components(InverseGraph const& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<char>                seen(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (seen[v]) {
        continue;
      }
      out.push_back(reachable(g, v));
      for (Vertex w : out.back()) {
        seen[w] = 1;
      }
    }
    return out;
  }

  std::size_t diameter_of(InverseGraph const& g, std::vector<Vertex> const& s) {
    std::size_t best = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      auto const dist = distances_from(g, s[i]);
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (dist[s[j]] == kUnreachable) {
          return kUnreachable;
        }
        best = std::max(best, dist[s[j]]);
      }
    }
    return best;
  }

}  // namespace invgraph
