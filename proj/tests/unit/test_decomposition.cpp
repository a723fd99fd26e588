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

#include <sstream>

#include "invgraph/decomposition.hpp"
#include "invgraph/error.hpp"
#include "invgraph/families.hpp"
#include "invgraph/metric.hpp"
#include "support.hpp"

using namespace invgraph;
using testing::w;

namespace {
  // bags {0,1}, {1,2}, ... along a path graph
  TreeDecomposition path_bags(RootedGraph const& rg, std::vector<std::string> const& keys) {
    TreeDecomposition td;
    for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
      td.nodes.push_back("t" + std::to_string(i));
      td.bags.push_back({rg.graph.vertex(keys[i]), rg.graph.vertex(keys[i + 1])});
      if (i > 0) {
        td.tree_edges.emplace_back(i - 1, i);
      }
    }
    return td;
  }

  StrongTreePartition spheres(RootedGraph const& rg) {
    auto const          nrm = norms(rg);
    StrongTreePartition p;
    for (Vertex v = 0; v < rg.graph.num_vertices(); ++v) {
      if (p.blocks.size() <= nrm[v]) {
        p.blocks.resize(nrm[v] + 1);
      }
      p.blocks[nrm[v]].push_back(v);
    }
    return p;
  }
}  // namespace

TEST_CASE("tree decomposition of a line") {
  RootedGraph line = free_group_ball(1, 2);
  std::vector<std::string> keys = {"a'a'", "a'", "1", "a", "aa"};
  TreeDecomposition td = path_bags(line, keys);
  auto report = verify_tree_decomposition(line.graph, td);
  CHECK(report.valid());
  CHECK(report.max_bag_diameter == 1);

  TreeDecomposition missing = td;
  missing.bags.back().pop_back();
  auto r1 = verify_tree_decomposition(line.graph, missing);
  CHECK_FALSE(r1.t1);
  CHECK_FALSE(r1.t2);
  CHECK(r1.witness == std::optional<Vertex>(line.graph.vertex("aa")));
  CHECK(r1.edge_witness);

  TreeDecomposition torn = td;
  torn.bags[2].push_back(line.graph.vertex("a'a'"));  // t0 and t2, not t1
  auto r3 = verify_tree_decomposition(line.graph, torn);
  CHECK(r3.t1);
  CHECK_FALSE(r3.t3);
  CHECK(r3.witness == std::optional<Vertex>(line.graph.vertex("a'a'")));

  TreeDecomposition looped = td;
  looped.tree_edges.emplace_back(0, 3);
  CHECK_FALSE(verify_tree_decomposition(line.graph, looped).tree);

  TreeDecomposition bad = td;
  bad.bags.pop_back();
  CHECK_THROWS_AS(verify_tree_decomposition(line.graph, bad), Error);
}

TEST_CASE("a single bag holding the cycle") {
  RootedGraph       c = cycle_graph(5);
  TreeDecomposition td;
  td.nodes = {"all"};
  td.bags  = {{0, 1, 2, 3, 4}};
  auto report = verify_tree_decomposition(c.graph, td);
  CHECK(report.valid());
  CHECK(report.max_bag_diameter == 2);
}

TEST_CASE("decomposition files") {
  RootedGraph line = free_group_ball(1, 2);
  TreeDecomposition td = path_bags(line, {"a'a'", "a'", "1", "a", "aa"});
  std::ostringstream out;
  write_tree_decomposition(out, line.graph, td);
  std::istringstream in(out.str());
  DecompositionFile file = read_decomposition(in, line.graph);
  REQUIRE(file.tree);
  CHECK(file.tree->bags == td.bags);
  CHECK(file.tree->tree_edges == td.tree_edges);

  std::istringstream blocks("block 1\nblock a a'\nblock aa a'a'\n");
  DecompositionFile  pf = read_decomposition(blocks, line.graph);
  REQUIRE(pf.partition);
  CHECK(pf.partition->blocks.size() == 3);

  std::istringstream mixed("bag t 1\nblock a\n");
  CHECK_THROWS_AS(read_decomposition(mixed, line.graph), ParseError);
  std::istringstream unknown("bag t 1 zz\n");
  try {
    (void)read_decomposition(unknown, line.graph);
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.line() == 1);
  }
  std::istringstream dangling("bag t 1\ntree-edge t u\n");
  CHECK_THROWS_AS(read_decomposition(dangling, line.graph), ParseError);
}

TEST_CASE("strong tree partitions") {
  RootedGraph tree = free_group_ball(2, 3);
  auto        rt   = verify_strong_tree_decomposition(tree.graph, spheres(tree));
  CHECK(rt.valid());
  CHECK(rt.quotient_edges.size() == 3);
  CHECK(rt.max_block_diameter == 6);
  CHECK(rt.augmented_report.valid());
  CHECK(rt.augmented_within_bound);

  RootedGraph z2 = free_abelian_ball(2, 4);
  auto        rz = verify_strong_tree_decomposition(z2.graph, spheres(z2));
  CHECK(rz.valid());
  CHECK(rz.augmented_report.valid());

  // singletons on a cycle: the quotient is the cycle itself
  RootedGraph         c = cycle_graph(6);
  StrongTreePartition singletons;
  for (Vertex v = 0; v < 6; ++v) {
    singletons.blocks.push_back({v});
  }
  auto rc = verify_strong_tree_decomposition(c.graph, singletons);
  CHECK_FALSE(rc.valid());
  CHECK(rc.max_block_diameter == 0);

  StrongTreePartition overlap = singletons;
  overlap.blocks[0].push_back(1);
  CHECK_THROWS_AS(verify_strong_tree_decomposition(c.graph, overlap), Error);
  StrongTreePartition gap = singletons;
  gap.blocks.pop_back();
  CHECK_THROWS_AS(verify_strong_tree_decomposition(c.graph, gap), Error);
}

TEST_CASE("cone separation") {
  RootedGraph f2 = free_group_ball(2, 8);
  CHECK(cone_separation_check(f2, f2.graph.vertex("aa"), 1));
  CHECK(cone_separation_check(f2, f2.graph.vertex("ab'a"), 2));
  CHECK_THROWS_AS(cone_separation_check(f2, f2.graph.vertex("a"), 1), Error);
  CHECK_THROWS_AS(cone_separation_check(f2, f2.graph.vertex("aaaaaaa"), 3), TrustError);

  // in the plane the half-plane cone is reached around the disk
  RootedGraph z2 = free_abelian_ball(2, 8);
  CHECK_FALSE(cone_separation_check(z2, z2.graph.vertex("3,0"), 1));
  CHECK_FALSE(cone_separation_check(z2, z2.graph.vertex("2,2"), 3));
  // inside a radius 8 ball the whole corner cone of (3,3) lies in D_2(3,3)
  CHECK(cone_separation_check(z2, z2.graph.vertex("3,3"), 2));
}

TEST_CASE("thin polygons") {
  RootedGraph  c = cycle_graph(4);
  Alphabet const& a = c.graph.alphabet();
  std::vector<Walk> bigon = {*trace_walk(c.graph, c.graph.vertex("0"), w(a, "a a")),
                             *trace_walk(c.graph, c.graph.vertex("2"), w(a, "a a"))};
  CHECK(polygon_thin_check(c.graph, bigon, 1));
  CHECK_FALSE(polygon_thin_check(c.graph, bigon, 0));

  RootedGraph f2 = free_group_ball(2, 4);
  Alphabet const& ab = f2.graph.alphabet();
  // a tripod triangle is 0-thin
  std::vector<Walk> tri = {*trace_walk(f2.graph, f2.root, w(ab, "a b")),
                           *trace_walk(f2.graph, f2.graph.vertex("ab"), w(ab, "b' b'")),
                           *trace_walk(f2.graph, f2.graph.vertex("ab'"), w(ab, "b a'"))};
  CHECK(polygon_thin_check(f2.graph, tri, 0));

  RootedGraph six = cycle_graph(6);
  std::vector<Walk> long_way = {*trace_walk(six.graph, six.root, w(a, "a a a a")),
                                *trace_walk(six.graph, six.graph.vertex("4"), w(a, "a a"))};
  CHECK_THROWS_AS(polygon_thin_check(six.graph, long_way, 3), Error);
  std::vector<Walk> open = {*trace_walk(six.graph, six.root, w(a, "a"))};
  CHECK_THROWS_AS(polygon_thin_check(six.graph, open, 3), Error);
}
