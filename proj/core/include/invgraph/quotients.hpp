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

// Determinizing vertex quotients, automorphism groups of finite graphs and
// the η map from quotient circuits to elements of the acting subgroup.

#ifndef INVGRAPH_QUOTIENTS_HPP_
#define INVGRAPH_QUOTIENTS_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invgraph/graph.hpp"
#include "invgraph/morphisms.hpp"

namespace invgraph {

  // Γ/ρ_W: the smallest equivalence containing W × W that is closed under
  // "x ~ y and both have an a-edge ⇒ their a-successors are equivalent",
  // and the (deterministic) quotient graph it induces.
  struct DvQuotient {
    RootedGraph         base;
    std::vector<Vertex> seeds;
    RootedGraph         quotient;  // root is the class of the base root
    // class_of[x] is the quotient vertex of x; doubles as the projection.
    GraphMorphism projection;
    // Every truncated base vertex lacking some letter already has that letter
    // realized elsewhere in its class, so unseen edges cannot add new
    // quotient edges.
    bool saturated = true;

    Vertex class_of(Vertex x) const {
      return projection(x);
    }
  };

  // Throws Error for an empty seed set. Quotient vertex keys are the key of
  // the smallest member of each class, classes numbered by that member.
  DvQuotient dv_quotient(RootedGraph const& rg, std::vector<Vertex> const& seeds);

  // The full automorphism group of a finite graph: one propagation attempt
  // per target of a fixed base vertex; a morphism that is a bijection is an
  // automorphism. The identity comes first.
  std::vector<GraphMorphism> automorphisms(InverseGraph const& g);

  GraphMorphism compose(GraphMorphism const& outer, GraphMorphism const& inner);
  GraphMorphism invert(GraphMorphism const& m);

  struct OrbitLabeling {
    std::vector<GraphMorphism> automorphisms;
    std::vector<std::size_t>   orbit_of;  // orbits numbered by smallest member
    std::size_t                orbit_count = 0;
  };

  OrbitLabeling orbit_partition(InverseGraph const& g);
  // Orbits of the subgroup generated by the given automorphisms.
  OrbitLabeling orbit_partition(InverseGraph const& g, std::vector<GraphMorphism> const& group);

  // Finite graphs are always quasi-transitive; the orbit count is what
  // matters.
  std::pair<bool, std::size_t> quasi_transitivity(InverseGraph const& g);

  // A concrete subgroup H acting on a base graph, given by the orbit of the
  // root and a multiplication of element labels. An element is named by the
  // key of the vertex it sends the root to.
  struct SubgroupAction {
    std::vector<Vertex> orbit;
    std::string         identity;
    // compose(u, v) names the element u ∘ v.
    std::function<std::string(std::string_view, std::string_view)> compose;
  };

  // H given as a list of automorphisms of a finite graph (closed under
  // composition, as automorphisms() returns).
  SubgroupAction automorphism_action(RootedGraph const& rg, std::vector<GraphMorphism> group);

  // Translations by m_1 Z × ... × m_r Z on a free abelian ball whose vertex
  // keys are comma separated integer coordinates.
  SubgroupAction lattice_translations(RootedGraph const& rg, std::vector<long> moduli);

  // Left multiplication by the subgroup accepted by a Stallings graph, on a
  // free group ball whose vertex keys are reduced words ("1" for the root).
  SubgroupAction free_group_translations(RootedGraph const& rg, RootedGraph const& subgroup);

  // η(w): lift the quotient circuit w from the base root to a walk ending at
  // some w_1 in the orbit and return the element label of w_1.
  // Throws Error if w is not accepted by the quotient, TrustError if the lift
  // needs an unseen edge, or if the quotient is unsaturated and the lift
  // touches a truncated vertex.
  std::string eta_evaluate(DvQuotient const& q, SubgroupAction const& action, Word const& w);

}  // namespace invgraph

#endif  // INVGRAPH_QUOTIENTS_HPP_
