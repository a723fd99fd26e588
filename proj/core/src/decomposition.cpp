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

#include "invgraph/decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "invgraph/error.hpp"
#include "invgraph/metric.hpp"
#include "invgraph/text_format.hpp"

namespace invgraph {

  namespace {
    bool is_tree(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& edges) {
      if (n == 0 || edges.size() != n - 1) {
        return false;
      }
      std::vector<std::vector<std::size_t>> adj(n);
      for (auto [a, b] : edges) {
        if (a >= n || b >= n || a == b) {
          return false;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
      std::vector<char>        seen(n, 0);
      std::vector<std::size_t> queue{0};
      seen[0] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (std::size_t t : adj[queue[i]]) {
          if (!seen[t]) {
            seen[t] = 1;
            queue.push_back(t);
          }
        }
      }
      return queue.size() == n;
    }
  }  // namespace

  TreeDecompositionReport verify_tree_decomposition(InverseGraph const&      g,
                                                    TreeDecomposition const& td) {
    std::size_t const n = td.nodes.size();
    if (td.bags.size() != n) {
      throw Error("tree decomposition has " + std::to_string(n) + " nodes but "
                  + std::to_string(td.bags.size()) + " bags");
    }
    std::vector<std::vector<std::size_t>> holders(g.num_vertices());
    for (std::size_t t = 0; t < n; ++t) {
      for (Vertex v : td.bags[t]) {
        if (v >= g.num_vertices()) {
          throw Error("bag " + td.nodes[t] + " refers to an unknown vertex");
        }
        holders[v].push_back(t);
      }
    }
    TreeDecompositionReport report;
    report.tree = is_tree(n, td.tree_edges);

    report.t1 = true;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (holders[v].empty()) {
        report.t1 = false;
        if (!report.witness) {
          report.witness = v;
        }
      }
    }

    report.t2 = true;
    for (Edge const& e : g.positive_edges()) {
      auto const& a  = holders[e.source];
      auto const& b  = holders[e.target];
      bool        ok = std::any_of(a.begin(), a.end(), [&](std::size_t t) {
        return std::find(b.begin(), b.end(), t) != b.end();
      });
      if (!ok) {
        report.t2 = false;
        if (!report.edge_witness) {
          report.edge_witness = e;
        }
      }
    }

    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : td.tree_edges) {
      if (a < n && b < n) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
    report.t3 = true;
    std::vector<char> in_set(n, 0), seen(n, 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto const& hs = holders[v];
      if (hs.size() <= 1) {
        continue;
      }
      for (std::size_t t : hs) {
        in_set[t] = 1;
      }
      std::vector<std::size_t> queue{hs.front()};
      seen[hs.front()] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (std::size_t t : adj[queue[i]]) {
          if (in_set[t] && !seen[t]) {
            seen[t] = 1;
            queue.push_back(t);
          }
        }
      }
      std::set<std::size_t> unique(hs.begin(), hs.end());
      for (std::size_t t : hs) {
        in_set[t] = 0;
      }
      for (std::size_t t : queue) {
        seen[t] = 0;
      }
      if (queue.size() != unique.size()) {
        report.t3 = false;
        if (!report.witness) {
          report.witness = v;
        }
      }
    }

    for (auto const& bag : td.bags) {
      std::size_t d = diameter_of(g, bag);
      if (d == kUnreachable || report.max_bag_diameter == kUnreachable) {
        report.max_bag_diameter = kUnreachable;
      } else {
        report.max_bag_diameter = std::max(report.max_bag_diameter, d);
      }
    }
    return report;
  }

  StrongTreeReport verify_strong_tree_decomposition(InverseGraph const&        g,
                                                    StrongTreePartition const& p) {
    std::vector<std::size_t> block_of(g.num_vertices(), static_cast<std::size_t>(-1));
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      if (p.blocks[b].empty()) {
        throw Error("partition has an empty block");
      }
      for (Vertex v : p.blocks[b]) {
        if (v >= g.num_vertices()) {
          throw Error("block refers to an unknown vertex");
        }
        if (block_of[v] != static_cast<std::size_t>(-1)) {
          throw Error("vertex " + g.key(v) + " lies in two blocks");
        }
        block_of[v] = b;
      }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (block_of[v] == static_cast<std::size_t>(-1)) {
        throw Error("vertex " + g.key(v) + " lies in no block");
      }
    }

    StrongTreeReport                              report;
    std::set<std::pair<std::size_t, std::size_t>> joined;
    for (Edge const& e : g.arcs()) {
      std::size_t a = block_of[e.source], b = block_of[e.target];
      if (a != b) {
        joined.emplace(std::min(a, b), std::max(a, b));
      }
    }
    report.quotient_edges.assign(joined.begin(), joined.end());
    report.quotient_is_tree = is_tree(p.blocks.size(), report.quotient_edges);
    for (auto const& block : p.blocks) {
      std::size_t d = diameter_of(g, block);
      report.max_block_diameter =
          (d == kUnreachable || report.max_block_diameter == kUnreachable)
              ? kUnreachable
              : std::max(report.max_block_diameter, d);
    }

    TreeDecomposition& td = report.augmented;
    td.tree_edges         = report.quotient_edges;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      td.nodes.push_back("t" + std::to_string(b));
      std::set<Vertex> bag(p.blocks[b].begin(), p.blocks[b].end());
      for (Vertex v : p.blocks[b]) {
        for (Letter a : g.alphabet().letters()) {
          if (Vertex t = g.target(v, a); t != kNoVertex) {
            bag.insert(t);
          }
        }
      }
      td.bags.emplace_back(bag.begin(), bag.end());
    }
    report.augmented_report = verify_tree_decomposition(g, td);
    report.augmented_within_bound =
        report.max_block_diameter != kUnreachable
        && report.augmented_report.max_bag_diameter != kUnreachable
        && report.augmented_report.max_bag_diameter <= report.max_block_diameter + 2;
    return report;
  }

  DecompositionFile read_decomposition(std::istream& in, InverseGraph const& g) {
    DecompositionFile                 file;
    TreeDecomposition                 td;
    StrongTreePartition               partition;
    std::map<std::string, std::size_t> node_index;
    std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> pending_edges;
    std::string line;
    std::size_t number = 0;
    auto        vertex = [&](std::string const& key) {
      auto v = g.find_vertex(key);
      if (!v) {
        throw ParseError(number, "unknown vertex '" + key + "'");
      }
      return *v;
    };
    while (std::getline(in, line)) {
      ++number;
      auto tokens = tokenize_line(line);
      if (tokens.empty()) {
        continue;
      }
      if (tokens[0] == "bag") {
        if (tokens.size() < 2) {
          throw ParseError(number, "expected 'bag NODE VERTEX...'");
        }
        if (node_index.count(tokens[1])) {
          throw ParseError(number, "second bag for node '" + tokens[1] + "'");
        }
        node_index[tokens[1]] = td.nodes.size();
        td.nodes.push_back(tokens[1]);
        td.bags.emplace_back();
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          td.bags.back().push_back(vertex(tokens[i]));
        }
      } else if (tokens[0] == "tree-edge") {
        if (tokens.size() != 3) {
          throw ParseError(number, "expected 'tree-edge NODE NODE'");
        }
        pending_edges.push_back({number, {tokens[1], tokens[2]}});
      } else if (tokens[0] == "block") {
        partition.blocks.emplace_back();
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          partition.blocks.back().push_back(vertex(tokens[i]));
        }
      } else {
        throw ParseError(number, "unknown directive '" + tokens[0] + "'");
      }
    }
    for (auto const& [where, ends] : pending_edges) {
      auto a = node_index.find(ends.first);
      auto b = node_index.find(ends.second);
      if (a == node_index.end() || b == node_index.end()) {
        throw ParseError(where, "tree edge between unknown nodes");
      }
      td.tree_edges.emplace_back(a->second, b->second);
    }
    bool has_tree = !td.nodes.empty() || !pending_edges.empty();
    if (has_tree && !partition.blocks.empty()) {
      throw ParseError(0, "a decomposition file holds bags or blocks, not both");
    }
    if (has_tree) {
      file.tree = std::move(td);
    } else if (!partition.blocks.empty()) {
      file.partition = std::move(partition);
    } else {
      throw ParseError(0, "empty decomposition file");
    }
    return file;
  }

  DecompositionFile load_decomposition(std::string const& path, InverseGraph const& g) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    return read_decomposition(in, g);
  }

  void write_tree_decomposition(std::ostream& out, InverseGraph const& g, TreeDecomposition const& td) {
    for (std::size_t t = 0; t < td.nodes.size(); ++t) {
      out << "bag " << td.nodes[t];
      for (Vertex v : td.bags[t]) {
        out << ' ' << g.key(v);
      }
      out << '\n';
    }
    for (auto [a, b] : td.tree_edges) {
      out << "tree-edge " << td.nodes[a] << ' ' << td.nodes[b] << '\n';
    }
  }

  bool cone_separation_check(RootedGraph const& rg, Vertex v, std::size_t delta) {
    InverseGraph const& g = rg.graph;
    g.check_vertex(v);
    auto const from_v = distances_from(g, v);
    if (from_v[rg.root] <= delta) {
      throw Error("the root lies in the disk of radius " + std::to_string(delta) + " around "
                  + g.key(v));
    }
    auto const        norm    = norms(rg);
    std::size_t const trusted = trusted_radius(rg);
    if (trusted != kUnbounded && norm[v] + delta > trusted) {
      throw TrustError("the disk of radius " + std::to_string(delta) + " around " + g.key(v)
                       + " reaches beyond the trusted radius " + std::to_string(trusted));
    }
    std::vector<char>   seen(g.num_vertices(), 0);
    std::vector<Vertex> queue{rg.root};
    seen[rg.root] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex u = queue[i];
      if (from_v[u] != kUnreachable && norm[u] == norm[v] + from_v[u]) {
        return false;  // reached C(v) outside the disk
      }
      for (Letter a : g.alphabet().letters()) {
        Vertex t = g.target(u, a);
        if (t != kNoVertex && !seen[t] && from_v[t] > delta) {
          seen[t] = 1;
          queue.push_back(t);
        }
      }
    }
    return true;
  }

  bool polygon_thin_check(InverseGraph const& g, std::vector<Walk> const& polygon, std::size_t delta) {
    if (polygon.size() < 2) {
      throw Error("a polygon has at least two sides");
    }
    for (std::size_t i = 0; i < polygon.size(); ++i) {
      Walk const& side = polygon[i];
      if (side.vertices.size() != side.label.size() + 1) {
        throw Error("malformed walk on side " + std::to_string(i));
      }
      auto d = distance(g, side.vertices.front(), side.vertices.back());
      if (!d || *d != side.length()) {
        throw Error("side " + std::to_string(i) + " is not a geodesic");
      }
      Walk const& next = polygon[(i + 1) % polygon.size()];
      if (side.end() != next.vertices.front()) {
        throw Error("sides " + std::to_string(i) + " and "
                    + std::to_string((i + 1) % polygon.size()) + " do not meet");
      }
    }
    for (std::size_t i = 0; i < polygon.size(); ++i) {
      for (Vertex v : polygon[i].vertices) {
        auto const dist = distances_from(g, v);
        bool       near = false;
        for (std::size_t j = 0; j < polygon.size() && !near; ++j) {
          if (j == i) {
            continue;
          }
          for (Vertex w : polygon[j].vertices) {
            if (dist[w] <= delta) {
              near = true;
              break;
            }
          }
        }
        if (!near) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace invgraph
