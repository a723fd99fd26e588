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

#include "invgraph/quotients.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "invgraph/error.hpp"

namespace invgraph {

  namespace {
    // Union-find whose classes remember one a-successor per letter; merging
    // two classes merges their successors too.
    class SuccessorClosure {
     public:
      explicit SuccessorClosure(InverseGraph const& g)
          : width_(g.alphabet().size()),
            parent_(g.num_vertices()),
            slots_(g.num_vertices() * width_, kNoVertex) {
        std::iota(parent_.begin(), parent_.end(), Vertex{0});
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
          for (std::size_t c = 0; c < width_; ++c) {
            slots_[v * width_ + c] = g.target(v, Letter::from_code(c));
          }
        }
      }

      void unite(Vertex x, Vertex y) {
        pending_.emplace_back(x, y);
        while (!pending_.empty()) {
          auto [a, b] = pending_.front();
          pending_.pop_front();
          merge(a, b);
        }
      }

      Vertex find(Vertex x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      bool class_has(Vertex x, Letter a) {
        return slots_[find(x) * width_ + a.code()] != kNoVertex;
      }

     private:
      void merge(Vertex x, Vertex y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return;
        }
        if (y < x) {
          std::swap(x, y);
        }
        parent_[y] = x;
        for (std::size_t c = 0; c < width_; ++c) {
          Vertex  t  = slots_[y * width_ + c];
          Vertex& to = slots_[x * width_ + c];
          if (t == kNoVertex) {
            continue;
          }
          if (to == kNoVertex) {
            to = t;
          } else {
            pending_.emplace_back(to, t);
          }
        }
      }

      std::size_t                          width_;
      std::vector<Vertex>                  parent_;
      std::vector<Vertex>                  slots_;
      std::deque<std::pair<Vertex, Vertex>> pending_;
    };
  }  // namespace

  DvQuotient dv_quotient(RootedGraph const& rg, std::vector<Vertex> const& seeds) {
    if (seeds.empty()) {
      throw Error("dv_quotient needs a nonempty seed set");
    }
    InverseGraph const& g = rg.graph;
    for (Vertex s : seeds) {
      g.check_vertex(s);
    }
    SuccessorClosure closure(g);
    for (Vertex s : seeds) {
      closure.unite(seeds.front(), s);
    }

    DvQuotient q;
    q.base  = rg;
    q.seeds = seeds;
    std::vector<Vertex> class_index(g.num_vertices(), kNoVertex);
    InverseGraph        quotient(g.alphabet());
    q.projection.vertex_map.assign(g.num_vertices(), kNoVertex);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      Vertex rep = closure.find(v);
      if (class_index[rep] == kNoVertex) {
        class_index[rep] = quotient.add_vertex(g.key(v));
      }
      q.projection.vertex_map[v] = class_index[rep];
    }
    for (Edge const& e : g.arcs()) {
      quotient.add_arc(q.projection(e.source), e.label, q.projection(e.target));
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!g.truncated(v)) {
        continue;
      }
      for (Letter a : g.alphabet().letters()) {
        if (!g.has_edge(v, a) && !closure.class_has(v, a)) {
          q.saturated = false;
          quotient.set_truncated(q.projection(v));
        }
      }
    }
    q.quotient = RootedGraph(std::move(quotient), q.projection(rg.root));
    return q;
  }

  std::vector<GraphMorphism> automorphisms(InverseGraph const& g) {
    std::vector<GraphMorphism> out;
    if (g.num_vertices() == 0) {
      return out;
    }
    for (Vertex y = 0; y < g.num_vertices(); ++y) {
      auto m = find_morphism_from(g, 0, g, y);
      if (!m) {
        continue;
      }
      std::vector<char> hit(g.num_vertices(), 0);
      bool              bijective = true;
      for (Vertex image : m->vertex_map) {
        if (hit[image]++) {
          bijective = false;
          break;
        }
      }
      if (bijective) {
        out.push_back(std::move(*m));
      }
    }
    return out;
  }

  GraphMorphism compose(GraphMorphism const& outer, GraphMorphism const& inner) {
    GraphMorphism out{inner.vertex_map};
    for (Vertex& v : out.vertex_map) {
      v = outer(v);
    }
    return out;
  }

  GraphMorphism invert(GraphMorphism const& m) {
    GraphMorphism out{std::vector<Vertex>(m.vertex_map.size(), kNoVertex)};
    for (Vertex v = 0; v < m.vertex_map.size(); ++v) {
      out.vertex_map[m(v)] = v;
    }
    return out;
  }

  OrbitLabeling orbit_partition(InverseGraph const& g, std::vector<GraphMorphism> const& group) {
    OrbitLabeling labeling;
    labeling.automorphisms = group;
    std::vector<Vertex> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (GraphMorphism const& m : group) {
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        Vertex a = find(v);
        Vertex b = find(m(v));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    labeling.orbit_of.assign(g.num_vertices(), 0);
    std::unordered_map<Vertex, std::size_t> number;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto [it, fresh] = number.emplace(find(v), number.size());
      labeling.orbit_of[v] = it->second;
    }
    labeling.orbit_count = number.size();
    return labeling;
  }

  OrbitLabeling orbit_partition(InverseGraph const& g) {
    return orbit_partition(g, automorphisms(g));
  }

  std::pair<bool, std::size_t> quasi_transitivity(InverseGraph const& g) {
    return {true, orbit_partition(g).orbit_count};
  }

  SubgroupAction automorphism_action(RootedGraph const& rg, std::vector<GraphMorphism> group) {
    InverseGraph const& g = rg.graph;
    auto by_label = std::make_shared<std::unordered_map<std::string, GraphMorphism>>();
    SubgroupAction action;
    action.identity = g.key(rg.root);
    for (GraphMorphism& m : group) {
      if (!is_morphism(g, g, m)) {
        throw Error("automorphism_action: not a self-morphism");
      }
      Vertex image = m(rg.root);
      if (by_label->emplace(g.key(image), m).second) {
        action.orbit.push_back(image);
      }
    }
    std::sort(action.orbit.begin(), action.orbit.end());
    auto keys = std::make_shared<std::vector<std::string>>();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      keys->push_back(g.key(v));
    }
    Vertex root    = rg.root;
    action.compose = [by_label, keys, root](std::string_view u, std::string_view v) {
      auto iu = by_label->find(std::string(u));
      auto iv = by_label->find(std::string(v));
      if (iu == by_label->end() || iv == by_label->end()) {
        throw Error("element label outside the subgroup");
      }
      return (*keys)[iu->second(iv->second(root))];
    };
    return action;
  }

  namespace {
    std::vector<long> parse_coordinates(std::string const& key) {
      std::vector<long>  out;
      std::istringstream in(key);
      std::string        part;
      while (std::getline(in, part, ',')) {
        try {
          std::size_t used = 0;
          out.push_back(std::stol(part, &used));
          if (used != part.size()) {
            throw Error("");
          }
        } catch (std::exception const&) {
          throw Error("vertex key '" + key + "' is not a coordinate vector");
        }
      }
      return out;
    }

    std::string format_coordinates(std::vector<long> const& x) {
      std::string out;
      for (std::size_t i = 0; i < x.size(); ++i) {
        out += (i ? "," : "") + std::to_string(x[i]);
      }
      return out;
    }
  }  // namespace

  SubgroupAction lattice_translations(RootedGraph const& rg, std::vector<long> moduli) {
    InverseGraph const& g = rg.graph;
    SubgroupAction      action;
    action.identity = g.key(rg.root);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto x = parse_coordinates(g.key(v));
      if (x.size() != moduli.size()) {
        throw Error("lattice_translations: rank mismatch at " + g.key(v));
      }
      bool in_subgroup = true;
      for (std::size_t i = 0; i < x.size(); ++i) {
        in_subgroup = in_subgroup && moduli[i] != 0 && x[i] % moduli[i] == 0;
      }
      if (in_subgroup) {
        action.orbit.push_back(v);
      }
    }
    action.compose = [](std::string_view u, std::string_view v) {
      auto x = parse_coordinates(std::string(u));
      auto y = parse_coordinates(std::string(v));
      if (x.size() != y.size()) {
        throw Error("lattice_translations: rank mismatch");
      }
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += y[i];
      }
      return format_coordinates(x);
    };
    return action;
  }

  SubgroupAction free_group_translations(RootedGraph const& rg, RootedGraph const& subgroup) {
    InverseGraph const& g = rg.graph;
    if (!(g.alphabet() == subgroup.graph.alphabet())) {
      throw Error("free_group_translations: alphabets differ");
    }
    SubgroupAction action;
    action.identity = g.key(rg.root);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (accepts(subgroup, parse_word(g.alphabet(), g.key(v)))) {
        action.orbit.push_back(v);
      }
    }
    Alphabet alphabet = g.alphabet();
    action.compose    = [alphabet](std::string_view u, std::string_view v) {
      Word w = free_reduce(concat(parse_word(alphabet, u), parse_word(alphabet, v)));
      return w.empty() ? std::string("1") : format_word(alphabet, w, "");
    };
    return action;
  }

  std::string eta_evaluate(DvQuotient const& q, SubgroupAction const& action, Word const& w) {
    if (!accepts(q.quotient, w)) {
      throw Error("word is not accepted by the quotient at its root");
    }
    InverseGraph const& base   = q.base.graph;
    TraceResult const   result = trace_checked(base, q.base.root, w);
    if (result.blocked_by_truncation) {
      throw TrustError("lift leaves the trusted region");
    }
    if (!result.end) {
      throw Error("quotient circuit does not lift; the projection is not a cover");
    }
    if (!q.saturated && result.touched_truncation) {
      throw TrustError("lift touches truncated vertices of an unsaturated quotient");
    }
    if (std::find(action.orbit.begin(), action.orbit.end(), *result.end) == action.orbit.end()) {
      throw Error("lift ends at " + base.key(*result.end) + ", outside the subgroup orbit");
    }
    return base.key(*result.end);
  }

}  // namespace invgraph
