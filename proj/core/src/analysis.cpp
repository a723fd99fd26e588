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

#include "invgraph/analysis.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "invgraph/error.hpp"
#include "invgraph/metric.hpp"

namespace invgraph {

  namespace {
    // sigma[c] is the code of the image of the letter with code c.
    using Relabeling = std::vector<std::size_t>;

    std::vector<Relabeling> relabelings(Alphabet const& alphabet, ConeEquivalence mode) {
      std::size_t const       r = alphabet.rank();
      std::vector<Relabeling> out;
      Relabeling              identity(alphabet.size());
      std::iota(identity.begin(), identity.end(), std::size_t{0});
      if (mode == ConeEquivalence::kLabeled) {
        out.push_back(identity);
        return out;
      }
      std::vector<std::size_t> perm(r);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      do {
        for (std::size_t signs = 0; signs < (std::size_t{1} << r); ++signs) {
          Relabeling sigma(alphabet.size());
          for (std::size_t i = 0; i < r; ++i) {
            std::size_t flip  = (signs >> i) & 1u;
            sigma[2 * i]      = 2 * perm[i] + flip;
            sigma[2 * i + 1]  = 2 * perm[i] + (flip ^ 1u);
          }
          out.push_back(std::move(sigma));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return out;
    }

    Relabeling invert(Relabeling const& sigma) {
      Relabeling inv(sigma.size());
      for (std::size_t c = 0; c < sigma.size(); ++c) {
        inv[sigma[c]] = c;
      }
      return inv;
    }

    using Code = std::vector<std::uint32_t>;

    // Breadth-first code of the component of anchor, letters visited in the
    // order of their images under sigma (given as its inverse).
    Code component_code(InverseGraph const&      g,
                        std::vector<char> const& frontier,
                        Vertex                   anchor,
                        Relabeling const&        sigma_inv,
                        std::vector<Vertex>&     number) {
      std::size_t const   width = g.alphabet().size();
      std::vector<Vertex> order{anchor};
      number[anchor] = 0;
      Code code;
      for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex u = order[i];
        code.push_back(frontier[u] ? 1 : 0);
        for (std::size_t c = 0; c < width; ++c) {
          Vertex t = g.target(u, Letter::from_code(sigma_inv[c]));
          if (t == kNoVertex) {
            code.push_back(0);
            continue;
          }
          if (number[t] == kNoVertex) {
            number[t] = static_cast<Vertex>(order.size());
            order.push_back(t);
          }
          code.push_back(number[t] + 1);
        }
      }
      for (Vertex v : order) {
        number[v] = kNoVertex;
      }
      return code;
    }

    struct Components {
      std::vector<std::vector<Vertex>> members;
      std::vector<std::vector<Vertex>> anchors;  // frontier members, or all
    };

    Components split_components(EndCone const& c) {
      Components        out;
      std::vector<char> is_frontier(c.cone_graph.num_vertices(), 0);
      for (Vertex f : c.frontier) {
        is_frontier[f] = 1;
      }
      for (auto& comp : connected_components(c.cone_graph)) {
        std::vector<Vertex> anchors;
        for (Vertex v : comp) {
          if (is_frontier[v]) {
            anchors.push_back(v);
          }
        }
        if (anchors.empty()) {
          anchors = comp;
        }
        std::sort(anchors.begin(), anchors.end());
        out.anchors.push_back(std::move(anchors));
        out.members.push_back(std::move(comp));
      }
      return out;
    }

    std::vector<char> frontier_flags(EndCone const& c) {
      std::vector<char> flags(c.cone_graph.num_vertices(), 0);
      for (Vertex f : c.frontier) {
        flags[f] = 1;
      }
      return flags;
    }

    std::vector<Code> sorted_codes(EndCone const&           c,
                                   Components const&        comps,
                                   std::vector<char> const& frontier,
                                   Relabeling const&        sigma_inv) {
      std::vector<Vertex> number(c.cone_graph.num_vertices(), kNoVertex);
      std::vector<Code>   codes;
      for (auto const& anchors : comps.anchors) {
        Code best;
        for (Vertex a : anchors) {
          Code code = component_code(c.cone_graph, frontier, a, sigma_inv, number);
          if (best.empty() || code < best) {
            best = std::move(code);
          }
        }
        codes.push_back(std::move(best));
      }
      std::sort(codes.begin(), codes.end());
      return codes;
    }

    std::string serialize(std::vector<Code> const& codes) {
      std::string out;
      for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i) {
          out += ';';
        }
        for (std::size_t j = 0; j < codes[i].size(); ++j) {
          if (j) {
            out += ',';
          }
          out += std::to_string(codes[i][j]);
        }
      }
      return out;
    }

    // Propagates from1 -> to2 under sigma and checks for an isomorphism of
    // the two components carrying frontier onto frontier.
    bool component_isomorphic(EndCone const&             c1,
                              std::vector<char> const&   f1,
                              std::vector<Vertex> const& comp1,
                              Vertex                     from1,
                              EndCone const&             c2,
                              std::vector<char> const&   f2,
                              std::vector<Vertex> const& comp2,
                              Vertex                     to2,
                              Relabeling const&          sigma) {
      if (comp1.size() != comp2.size()) {
        return false;
      }
      InverseGraph const& g1 = c1.cone_graph;
      InverseGraph const& g2 = c2.cone_graph;
      std::unordered_map<Vertex, Vertex> map{{from1, to2}};
      std::unordered_map<Vertex, Vertex> back{{to2, from1}};
      std::vector<Vertex>                queue{from1};
      std::size_t const                  width = g1.alphabet().size();
      for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex u = queue[i];
        Vertex v = map[u];
        if (f1[u] != f2[v]) {
          return false;
        }
        for (std::size_t c = 0; c < width; ++c) {
          Vertex t1 = g1.target(u, Letter::from_code(c));
          Vertex t2 = g2.target(v, Letter::from_code(sigma[c]));
          if ((t1 == kNoVertex) != (t2 == kNoVertex)) {
            return false;
          }
          if (t1 == kNoVertex) {
            continue;
          }
          auto it = map.find(t1);
          if (it == map.end()) {
            if (back.count(t2)) {
              return false;
            }
            map.emplace(t1, t2);
            back.emplace(t2, t1);
            queue.push_back(t1);
          } else if (it->second != t2) {
            return false;
          }
        }
      }
      return queue.size() == comp1.size();
    }
  }  // namespace

  std::string cone_type(EndCone const& c, ConeEquivalence mode) {
    Components const  comps    = split_components(c);
    std::vector<char> frontier = frontier_flags(c);
    std::vector<Code> best;
    bool              have = false;
    for (Relabeling const& sigma : relabelings(c.cone_graph.alphabet(), mode)) {
      auto codes = sorted_codes(c, comps, frontier, invert(sigma));
      if (!have || codes < best) {
        best = std::move(codes);
        have = true;
      }
    }
    return serialize(best);
  }

  bool end_isomorphic(EndCone const& c1, EndCone const& c2, ConeEquivalence mode) {
    if (!(c1.cone_graph.alphabet() == c2.cone_graph.alphabet())) {
      return false;
    }
    if (c1.cone_graph.num_vertices() != c2.cone_graph.num_vertices()
        || c1.frontier.size() != c2.frontier.size()) {
      return false;
    }
    Components const comps1 = split_components(c1);
    Components const comps2 = split_components(c2);
    if (comps1.members.size() != comps2.members.size()) {
      return false;
    }
    auto const        f1 = frontier_flags(c1);
    auto const        f2 = frontier_flags(c2);
    std::size_t const k  = comps1.members.size();
    for (Relabeling const& sigma : relabelings(c1.cone_graph.alphabet(), mode)) {
      // matches[i][j]: component i of c1 is isomorphic to component j of c2.
      std::vector<std::vector<char>> matches(k, std::vector<char>(k, 0));
      for (std::size_t i = 0; i < k; ++i) {
        Vertex from = comps1.anchors[i].front();
        for (std::size_t j = 0; j < k; ++j) {
          for (Vertex to : comps2.anchors[j]) {
            if (component_isomorphic(c1, f1, comps1.members[i], from, c2, f2,
                                     comps2.members[j], to, sigma)) {
              matches[i][j] = 1;
              break;
            }
          }
        }
      }
      std::vector<char> used(k, 0);
      auto assign = [&](auto& self, std::size_t i) -> bool {
        if (i == k) {
          return true;
        }
        for (std::size_t j = 0; j < k; ++j) {
          if (matches[i][j] && !used[j]) {
            used[j] = 1;
            if (self(self, i + 1)) {
              return true;
            }
            used[j] = 0;
          }
        }
        return false;
      };
      if (assign(assign, 0)) {
        return true;
      }
    }
    return false;
  }

  Census end_cone_census(RootedGraph const& rg,
                         std::size_t        max_norm,
                         std::size_t        depth,
                         ConeEquivalence    mode,
                         std::size_t        jobs) {
    std::size_t const trusted = trusted_radius(rg);
    if (trusted != kUnbounded && max_norm + depth > trusted) {
      throw TrustError("census to norm " + std::to_string(max_norm) + " and depth "
                       + std::to_string(depth) + " needs a trusted radius of "
                       + std::to_string(max_norm + depth) + " (have "
                       + std::to_string(trusted) + ")");
    }
    InverseGraph const& g    = rg.graph;
    auto const          norm = norms(rg);

    // One task per (norm, component of {‖x‖ ≥ n}) that meets norm n.
    struct Task {
      std::size_t         norm = 0;
      std::vector<Vertex> vertices;  // norm-n members, ascending
      std::string         key;
    };
    std::vector<Task> tasks;
    std::size_t const width = g.alphabet().size();
    for (std::size_t n = 1; n <= max_norm; ++n) {
      std::vector<char> seen(g.num_vertices(), 0);
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (norm[v] != n || seen[v]) {
          continue;
        }
        Task                task{n, {}, {}};
        std::vector<Vertex> queue{v};
        seen[v] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
          Vertex u = queue[i];
          if (norm[u] == n) {
            task.vertices.push_back(u);
          }
          for (std::size_t c = 0; c < width; ++c) {
            Vertex t = g.target(u, Letter::from_code(c));
            if (t != kNoVertex && !seen[t] && norm[t] != kUnreachable && norm[t] >= n) {
              seen[t] = 1;
              queue.push_back(t);
            }
          }
        }
        std::sort(task.vertices.begin(), task.vertices.end());
        tasks.push_back(std::move(task));
      }
    }

    auto classify = [&](std::size_t begin, std::size_t step) {
      for (std::size_t i = begin; i < tasks.size(); i += step) {
        EndCone cone = end_cone(rg, tasks[i].vertices.front()).restricted(depth);
        tasks[i].key = cone_type(cone, mode);
      }
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
    if (jobs == 1) {
      classify(0, 1);
    } else {
      std::vector<std::thread> workers;
      std::vector<std::exception_ptr> errors(jobs);
      for (std::size_t j = 0; j < jobs; ++j) {
        workers.emplace_back([&, j] {
          try {
            classify(j, jobs);
          } catch (...) {
            errors[j] = std::current_exception();
          }
        });
      }
      for (auto& w : workers) {
        w.join();
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
    }

    Census census;
    census.max_norm = max_norm;
    census.depth    = depth;
    census.mode     = mode;
    census.per_norm.assign(max_norm + 1, 0);
    census.cumulative.assign(max_norm + 1, 0);
    std::map<std::string, std::size_t> type_of;
    std::vector<std::pair<std::size_t, Vertex>> order;
    std::unordered_map<Vertex, std::size_t>     task_of;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      for (Vertex v : tasks[i].vertices) {
        order.emplace_back(tasks[i].norm, v);
        task_of[v] = i;
      }
    }
    std::sort(order.begin(), order.end());
    std::vector<std::vector<char>> at_norm(max_norm + 1);
    for (auto const& [n, v] : order) {
      auto [it, fresh] = type_of.emplace(tasks[task_of[v]].key, type_of.size());
      if (fresh) {
        census.type_keys.push_back(it->first);
      }
      census.rows.push_back({n, g.key(v), "T" + std::to_string(it->second)});
      auto& marks = at_norm[n];
      if (marks.size() <= it->second) {
        marks.resize(it->second + 1, 0);
      }
      marks[it->second] = 1;
    }
    std::vector<char> so_far;
    for (std::size_t n = 1; n <= max_norm; ++n) {
      auto const& marks = at_norm[n];
      so_far.resize(std::max(so_far.size(), marks.size()), 0);
      for (std::size_t t = 0; t < marks.size(); ++t) {
        if (marks[t]) {
          ++census.per_norm[n];
          so_far[t] = 1;
        }
      }
      census.cumulative[n] =
          static_cast<std::size_t>(std::count(so_far.begin(), so_far.end(), 1));
    }
    return census;
  }

  void write_census_tsv(std::ostream& out, Census const& census) {
    out << "norm\tvertex\ttype\n";
    for (CensusRow const& row : census.rows) {
      out << row.norm << '\t' << row.vertex << '\t' << row.type << '\n';
    }
  }

  void write_census_summary(std::ostream& out, Census const& census) {
    out << "norm\ttypes\tcumulative\n";
    for (std::size_t n = 1; n <= census.max_norm; ++n) {
      out << n << '\t' << census.per_norm[n] << '\t' << census.cumulative[n] << '\n';
    }
  }

}  // namespace invgraph
