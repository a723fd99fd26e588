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

// Derivability of words over a base word in a finite graph, membership in
// the closure of a context-free language under Dyck insertions, and a free
// basis of the circuit group from a spanning tree.

#ifndef INVGRAPH_DERIVATION_HPP_
#define INVGRAPH_DERIVATION_HPP_

#include <vector>

#include "invgraph/grammar.hpp"
#include "invgraph/graph.hpp"

namespace invgraph {

  // w is derivable from s at y0: w = u_0 s_1 u_1 ... s_m u_m where s walks
  // y0 = y_0, y_1, ..., y_m and each u_i ∈ D(Λ, y_i). Dyck segments glue, so
  // inserting one segment per letter boundary covers every factorization.
  // Throws Error if s does not label a walk from y0.
  bool derivable(InverseGraph const& lambda, Vertex y0, Word const& w, Word const& s);

  // Every s from which w is derivable at y0, sorted shortlex.
  std::vector<Word> derivation_bases(InverseGraph const& lambda, Vertex y0, Word const& w);

  // w is derivable at y0 from some word of L(g).
  bool closure_member(CnfGrammar const& g, InverseGraph const& lambda, Vertex y0, Word const& w);

  // Breadth-first spanning tree from the root; one freely reduced word per
  // positive chord edge (root to u, the chord, v back to the root), in the
  // order of positive_edges().
  std::vector<Word> spanning_basis(RootedGraph const& rg);

}  // namespace invgraph

#endif  // INVGRAPH_DERIVATION_HPP_
