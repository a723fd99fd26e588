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

// Morphisms of inverse graphs, covers, walk lifting, cores and Stallings
// folding.
//
// A morphism is determined by the image of a single vertex: in a
// deterministic graph the image of every edge out of u is forced once u is
// placed. find_morphism therefore propagates one assignment breadth-first and
// either succeeds or hits a clash; there is no search.

#ifndef INVGRAPH_MORPHISMS_HPP_
#define INVGRAPH_MORPHISMS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "invgraph/graph.hpp"

namespace invgraph {

  // Vertex map of a label-preserving morphism; the edge map is induced.
  struct GraphMorphism {
    std::vector<Vertex> vertex_map;

    Vertex operator()(Vertex v) const {
      return vertex_map[v];
    }
    bool operator==(GraphMorphism const&) const = default;
  };

  // The unique morphism sending from to to, if any. The source must be
  // connected; truncated source vertices are fine because only realized
  // edges are checked. Throws Error if the alphabets differ.
  std::optional<GraphMorphism> find_morphism_from(InverseGraph const& src,
                                                  Vertex              from,
                                                  InverseGraph const& tgt,
                                                  Vertex              to);

  // Root-to-root morphism. On complete graphs it exists exactly when
  // L(src) ⊆ L(tgt).
  std::optional<GraphMorphism> find_morphism(RootedGraph const& src, RootedGraph const& tgt);

  // Morphisms both ways (then mutually inverse isomorphisms).
  bool isomorphic(RootedGraph const& a, RootedGraph const& b);

  // Every source edge lands on a target edge with the same label.
  bool is_morphism(InverseGraph const& src, InverseGraph const& tgt, GraphMorphism const& m);

  // Star maps are injective.
  bool is_immersion(InverseGraph const& src, InverseGraph const& tgt, GraphMorphism const& m);

  struct CoverReport {
    // Every non-truncated source star maps bijectively onto its target star.
    bool is_cover = false;
    // The image meets every target vertex.
    bool surjective = false;
    // Truncated source vertices, not checked.
    std::vector<Vertex> skipped;
    // First non-truncated vertex whose star is not onto, if any.
    std::optional<Vertex> witness;
  };

  CoverReport is_cover(InverseGraph const& src, InverseGraph const& tgt, GraphMorphism const& m);

  // The unique walk from start in the cover whose image is labelled w.
  // Throws Error if w does not trace from m(start) in the base, TrustError
  // if the lift needs an edge missing at a truncated vertex.
  Walk lift_walk(InverseGraph const& cover,
                 InverseGraph const& base,
                 GraphMorphism const& m,
                 Vertex              start,
                 Word const&         w);

  // Removes hanging trees: repeatedly deletes non-root vertices of degree at
  // most one. What remains is the set of vertices on reduced circuits
  // through the root.
  RootedGraph core_of(RootedGraph const& rg);

  struct FoldOptions {
    // Shuffle the order in which identifications are processed; the folded
    // graph does not depend on it.
    std::optional<std::uint64_t> shuffle_seed;
  };

  // Stallings graph of the subgroup generated by gens: a bouquet of circuits
  // labelled by the generators, folded until deterministic, then cored.
  // Vertex keys are "1" for the root and "s<i>" otherwise.
  RootedGraph stallings_fold(Alphabet const&          alphabet,
                             std::vector<Word> const& gens,
                             FoldOptions const&       options = {});

}  // namespace invgraph

#endif  // INVGRAPH_MORPHISMS_HPP_
