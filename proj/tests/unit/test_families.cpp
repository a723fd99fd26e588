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

#include <doctest.h>

#include <cmath>
#include <variant>

#include "invgraph/error.hpp"
#include "invgraph/families.hpp"
#include "invgraph/metric.hpp"
#include "invgraph/morphisms.hpp"
#include "support.hpp"

using namespace invgraph;

TEST_CASE("family sizes") {
  for (std::size_t r = 1; r <= 5; ++r) {
    RootedGraph f = free_group_ball(2, r);
    CHECK(f.graph.num_vertices() == 2 * static_cast<std::size_t>(std::pow(3, r)) - 1);
    CHECK(trusted_radius(f) == r);
    RootedGraph z = free_abelian_ball(2, r);
    CHECK(z.graph.num_vertices() == 2 * r * r + 2 * r + 1);
    CHECK(trusted_radius(z) == r);
    CHECK(free_group_ball(1, r).graph.num_vertices() == 2 * r + 1);
  }
  CHECK(cycle_graph(7).graph.num_vertices() == 7);
  CHECK(trusted_radius(cycle_graph(7)) == kUnbounded);
  RootedGraph b = bouquet({"a", "b", "c"});
  CHECK(b.graph.num_vertices() == 1);
  CHECK(b.graph.num_arcs() == 6);  // a loop and its inverse are two arcs
  CHECK_THROWS_AS(cycle_graph(0), Error);
}

TEST_CASE("families are inverse graphs") {
  std::vector<RootedGraph> all = {free_group_ball(3, 3), free_abelian_ball(3, 3), cycle_graph(5, "t"),
                                  bouquet({"p", "q"}), bicyclic_tree(30)};
  for (RootedGraph const& rg : all) {
    CHECK(validate(rg.graph).ok());
  }
}

TEST_CASE("bicyclic tree layout") {
  for (std::size_t n : {1, 4, 10, 25}) {
    RootedGraph t = bicyclic_tree(n);
    std::size_t squares = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    CHECK(t.graph.num_vertices() == 2 + n + squares);
    CHECK(t.graph.truncated(t.graph.vertex("b" + std::to_string(n))));
    CHECK(trusted_radius(t) == n);
  }
  RootedGraph t = bicyclic_tree(10);
  CHECK(t.graph.find_vertex("c4"));
  CHECK(t.graph.find_vertex("c9"));
  CHECK_FALSE(t.graph.find_vertex("c5"));
}

TEST_CASE("free group ball keys are reduced words") {
  RootedGraph f = free_group_ball(2, 3);
  Alphabet const& a = f.graph.alphabet();
  for (Vertex v = 0; v < f.graph.num_vertices(); ++v) {
    std::string const& key = f.graph.key(v);
    Word word = key == "1" ? Word{} : parse_word(a, key);
    CHECK(is_reduced(word));
    CHECK(trace(f.graph, f.root, word) == v);
  }
}

TEST_CASE("parse_family and make") {
  FamilySpec spec = parse_family({"free_group", "2", "3"});
  CHECK(spec.name == "free_group");
  auto out = make(spec);
  REQUIRE(std::holds_alternative<RootedGraph>(out));
  CHECK(isomorphic(std::get<RootedGraph>(out), free_group_ball(2, 3)));

  auto asm_ = make(parse_family({"dihedral_assembly"}));
  REQUIRE(std::holds_alternative<GroupAssembly>(asm_));
  CHECK(std::get<GroupAssembly>(asm_).transversal.size() == 2);

  auto cyc = make(parse_family({"cycle", "4", "t"}));
  CHECK(std::get<RootedGraph>(cyc).graph.alphabet().positive_names()
        == std::vector<std::string>{"t"});

  CHECK_THROWS_AS(parse_family({}), Error);
  CHECK_THROWS_AS(parse_family({"moebius", "3"}), Error);
  CHECK_THROWS_AS(parse_family({"free_group", "two", "3"}), Error);
  CHECK_THROWS_AS(parse_family({"free_group", "2"}), Error);
  CHECK_THROWS_AS(parse_family({"bouquet"}), Error);
}

TEST_CASE("cycle covers the bouquet") {
  RootedGraph c = cycle_graph(5);
  RootedGraph b = bouquet({"a"});
  auto        m = find_morphism(c, b);
  REQUIRE(m);
  CHECK(is_cover(c.graph, b.graph, *m).is_cover);
}
