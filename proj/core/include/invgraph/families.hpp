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

// Desk-scale graph families used by the tests, the benchmarks and the
// `make` subcommand.

#ifndef INVGRAPH_FAMILIES_HPP_
#define INVGRAPH_FAMILIES_HPP_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "invgraph/alphabet.hpp"
#include "invgraph/graph.hpp"
#include "invgraph/transducers.hpp"

namespace invgraph {

  // Ball of radius R in the Cayley graph of F_r over a, b, c, ... Keys are
  // reduced words written compactly ("ab'a"), "1" for the root. The sphere
  // of radius R is truncated.
  RootedGraph free_group_ball(std::size_t rank, std::size_t radius);
  RootedGraph free_group_ball(Alphabet const& alphabet, std::size_t radius);

  // ℓ¹ ball of Z^r; keys are coordinates "x,y,...", outer sphere truncated.
  RootedGraph free_abelian_ball(std::size_t rank, std::size_t radius);

  // Cayley graph of Z/n on one letter; keys "0".."n-1".
  RootedGraph cycle_graph(std::size_t n, std::string const& letter = "a");

  // One vertex "v" with a loop per letter.
  RootedGraph bouquet(std::vector<std::string> const& letters);

  // Root x0 with an a-leaf "a", a b-ray b1..bN (bN truncated) and a c-leaf
  // "c<k>" hanging off b_k for every square k = n² ≤ N, n ≥ 1.
  RootedGraph bicyclic_tree(std::size_t n);

  // D∞ = <x, s> over H = <x>, T = {1, s}.
  GroupAssembly dihedral_assembly();
  // Z×Z inside F₁×F₁: T = {1}, π₁ kills y, π₂ kills x.
  GroupAssembly z2_assembly();

  struct FamilySpec {
    std::string              name;
    std::vector<std::size_t> params;
    std::vector<std::string> letters;  // bouquet letters, cycle letter
  };

  // Parses `NAME ARGS...` as given to the CLI:
  //   free_group R RADIUS, free_abelian R RADIUS, cycle N [LETTER],
  //   bouquet LETTER..., bicyclic_tree N, dihedral_assembly, z2_assembly.
  // Throws Error on unknown names or bad parameters.
  FamilySpec parse_family(std::vector<std::string> const& args);

  using FamilyOutput = std::variant<RootedGraph, GroupAssembly>;

  FamilyOutput make(FamilySpec const& spec);

}  // namespace invgraph

#endif  // INVGRAPH_FAMILIES_HPP_
