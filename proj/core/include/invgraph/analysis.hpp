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

// End-cone types, end-isomorphism and the end-cone census of a ball.
//
// Cones are compared at a bounded relative depth, so a census only gives a
// lower bound on the number of cone types of the infinite graph.

#ifndef INVGRAPH_ANALYSIS_HPP_
#define INVGRAPH_ANALYSIS_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "invgraph/cones.hpp"
#include "invgraph/graph.hpp"

namespace invgraph {

  enum class ConeEquivalence {
    // Isomorphisms preserve every label.
    kLabeled,
    // Isomorphisms may also rename letters by a permutation of Ã that
    // commutes with inversion (applied uniformly to the whole cone).
    kUpToRelabeling,
  };

  // Canonical key of a cone: two cones get the same key exactly when
  // end_isomorphic holds in the same mode. Each connected component is
  // encoded by breadth-first numbering from each of its frontier vertices
  // (every vertex, for components without frontier), keeping the least
  // code; the key is the sorted list of component codes, minimized over
  // relabelings in kUpToRelabeling mode.
  std::string cone_type(EndCone const& c, ConeEquivalence mode = ConeEquivalence::kLabeled);

  // A label-preserving (up to relabeling in that mode) isomorphism of the
  // cone graphs carrying frontier onto frontier. Searched by anchoring a
  // vertex of each component and propagating.
  bool end_isomorphic(EndCone const&  c1,
                      EndCone const&  c2,
                      ConeEquivalence mode = ConeEquivalence::kLabeled);

  struct CensusRow {
    std::size_t norm = 0;
    std::string vertex;
    std::string type;  // "T<k>", numbered by first appearance
  };

  struct Census {
    std::size_t                max_norm = 0;
    std::size_t                depth    = 0;
    ConeEquivalence            mode     = ConeEquivalence::kUpToRelabeling;
    std::vector<CensusRow>     rows;            // by norm, then vertex index
    std::vector<std::size_t>   per_norm;        // index n: types at norm n
    std::vector<std::size_t>   cumulative;      // index n: types at norms 1..n
    std::vector<std::string>   type_keys;       // cone_type of T<k>
  };

  // Every vertex with 1 ≤ ‖v‖ ≤ max_norm, its end-cone restricted to the
  // given relative depth and classified. Vertices sharing an end-cone share
  // the computation. Throws TrustError when the ball is smaller than
  // max_norm + depth. jobs > 1 spreads the cone classification over threads.
  Census end_cone_census(RootedGraph const& rg,
                         std::size_t        max_norm,
                         std::size_t        depth,
                         ConeEquivalence    mode = ConeEquivalence::kUpToRelabeling,
                         std::size_t        jobs = 1);

  // norm, vertex, type per line after a header line.
  void write_census_tsv(std::ostream& out, Census const& census);
  // norm, types at that norm, cumulative, after a header line.
  void write_census_summary(std::ostream& out, Census const& census);

}  // namespace invgraph

#endif  // INVGRAPH_ANALYSIS_HPP_
