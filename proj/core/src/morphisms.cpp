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

#include "invgraph/morphisms.hpp"

#include <deque>
#include <numeric>
#include <random>

#include "invgraph/error.hpp"
#include "invgraph/metric.hpp"

namespace invgraph {

  std::optional<GraphMorphism> find_morphism_from(InverseGraph const& src,
                                                  Vertex              from,
                                                  InverseGraph const& tgt,
                                                  Vertex              to) {
    if (!(src.alphabet() == tgt.alphabet())) {
      throw Error("morphism between graphs over different alphabets");
    }
    src.check_vertex(from);
    tgt.check_vertex(to);
    GraphMorphism m{std::vector<Vertex>(src.num_vertices(), kNoVertex)};
    m.vertex_map[from]      = to;
    std::vector<Vertex> queue{from};
    std::size_t const   width = src.alphabet().size();
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex u = queue[i];
      for (std::size_t c = 0; c < width; ++c) {
        Letter a = Letter::from_code(c);
        Vertex v = src.target(u, a);
        if (v == kNoVertex) {
          continue;
        }
        Vertex image = tgt.target(m.vertex_map[u], a);
        if (image == kNoVertex) {
          return std::nullopt;
        }
        if (m.vertex_map[v] == kNoVertex) {
          m.vertex_map[v] = image;
          queue.push_back(v);
        } else if (m.vertex_map[v] != image) {
          return std::nullopt;
        }
      }
    }
    if (queue.size() != src.num_vertices()) {
      return std::nullopt;
    }
    return m;
  }

  std::optional<GraphMorphism> find_morphism(RootedGraph const& src, RootedGraph const& tgt) {
    return find_morphism_from(src.graph, src.root, tgt.graph, tgt.root);
  }

  bool isomorphic(RootedGraph const& a, RootedGraph const& b) {
    return a.graph.num_vertices() == b.graph.num_vertices() && find_morphism(a, b).has_value()
           && find_morphism(b, a).has_value();
  }

  bool is_morphism(InverseGraph const& src, InverseGraph const& tgt, GraphMorphism const& m) {
    if (m.vertex_map.size() != src.num_vertices()) {
      return false;
    }
    for (Vertex image : m.vertex_map) {
      if (image >= tgt.num_vertices()) {
        return false;
      }
    }
    for (Edge const& e : src.arcs()) {
      if (tgt.target(m(e.source), e.label) != m(e.target)) {
        return false;
      }
    }
    return true;
  }

  bool is_immersion(InverseGraph const& src, InverseGraph const& tgt, GraphMorphism const& m) {
    if (!is_morphism(src, tgt, m)) {
      return false;
    }
    // Distinct edges out of u carry distinct labels, so their images differ.
    std::size_t const width = src.alphabet().size();
    for (Vertex u = 0; u < src.num_vertices(); ++u) {
      std::vector<char> used(width, 0);
      for (std::size_t c = 0; c < width; ++c) {
        if (src.target(u, Letter::from_code(c)) != kNoVertex) {
          if (used[c]++) {
            return false;
          }
        }
      }
    }
    return true;
  }

  CoverReport is_cover(InverseGraph const& src, InverseGraph const& tgt, GraphMorphism const& m) {
    CoverReport report;
    if (!is_morphism(src, tgt, m)) {
      return report;
    }
    report.is_cover         = true;
    std::size_t const width = src.alphabet().size();
    for (Vertex u = 0; u < src.num_vertices(); ++u) {
      if (src.truncated(u)) {
        report.skipped.push_back(u);
        continue;
      }
      for (std::size_t c = 0; c < width; ++c) {
        Letter a = Letter::from_code(c);
        if (tgt.has_edge(m(u), a) && !src.has_edge(u, a)) {
          report.is_cover = false;
          if (!report.witness) {
            report.witness = u;
          }
        }
      }
    }
    std::vector<char> hit(tgt.num_vertices(), 0);
    for (Vertex image : m.vertex_map) {
      hit[image] = 1;
    }
    report.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    return report;
  }

  Walk lift_walk(InverseGraph const&  cover,
                 InverseGraph const&  base,
                 GraphMorphism const& m,
                 Vertex               start,
                 Word const&          w) {
    cover.check_vertex(start);
    if (!trace(base, m(start), w)) {
      throw Error("word does not label a walk from the image of the start vertex");
    }
    Walk walk{start, w, {start}};
    for (Letter a : w) {
      Vertex u    = walk.vertices.back();
      Vertex next = cover.target(u, a);
      if (next == kNoVertex) {
        if (cover.truncated(u)) {
          throw TrustError("lift leaves the trusted region at " + cover.key(u));
        }
        throw Error("not a cover at " + cover.key(u));
      }
      walk.vertices.push_back(next);
    }
    return walk;
  }

  RootedGraph core_of(RootedGraph const& rg) {
    InverseGraph const& g = rg.graph;
    std::vector<std::size_t> degree(g.num_vertices());
    std::vector<char>        removed(g.num_vertices(), 0);
    std::deque<Vertex>       queue;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      degree[v] = g.degree(v);
      if (v != rg.root && degree[v] <= 1) {
        queue.push_back(v);
      }
    }
    std::size_t const width = g.alphabet().size();
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (removed[v]) {
        continue;
      }
      removed[v] = 1;
      for (std::size_t c = 0; c < width; ++c) {
        Vertex t = g.target(v, Letter::from_code(c));
        if (t != kNoVertex && !removed[t] && t != v) {
          if (--degree[t] <= 1 && t != rg.root) {
            queue.push_back(t);
          }
        }
      }
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!removed[v]) {
        keep.push_back(v);
      }
    }
    Subgraph sub = induced_subgraph(g, keep, false);
    return RootedGraph(std::move(sub.graph), sub.from_original[rg.root]);
  }

  namespace {
    class Folder {
     public:
      explicit Folder(std::size_t width) : width_(width) {}

      std::size_t add_vertex() {
        parent_.push_back(parent_.size());
        slots_.resize(slots_.size() + width_, kNone);
        return parent_.size() - 1;
      }

      void add_edge(std::size_t u, Letter a, std::size_t v) {
        add_arc(u, a.code(), v);
        add_arc(v, a.inverse().code(), u);
      }

      void fold(std::optional<std::uint64_t> seed) {
        std::mt19937_64 rng(seed.value_or(0));
        while (!pending_.empty()) {
          std::size_t pick = 0;
          if (seed) {
            pick = std::uniform_int_distribution<std::size_t>(0, pending_.size() - 1)(rng);
            std::swap(pending_[pick], pending_.front());
          }
          auto [x, y] = pending_.front();
          pending_.pop_front();
          merge(x, y);
        }
      }

      std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      std::size_t slot(std::size_t v, std::size_t code) const {
        return slots_[v * width_ + code];
      }

      std::size_t size() const {
        return parent_.size();
      }

      static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

     private:
      void add_arc(std::size_t u, std::size_t code, std::size_t v) {
        u               = find(u);
        std::size_t& to = slots_[u * width_ + code];
        if (to == kNone) {
          to = v;
        } else {
          pending_.emplace_back(to, v);
        }
      }

      void merge(std::size_t x, std::size_t y) {
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
          std::size_t t = slots_[y * width_ + c];
          if (t != kNone) {
            add_arc(x, c, t);
          }
        }
      }

      std::size_t                                   width_;
      std::vector<std::size_t>                      parent_;
      std::vector<std::size_t>                      slots_;
      std::deque<std::pair<std::size_t, std::size_t>> pending_;
    };
  }  // namespace

  RootedGraph stallings_fold(Alphabet const&          alphabet,
                             std::vector<Word> const& gens,
                             FoldOptions const&       options) {
    Folder      folder(alphabet.size());
    std::size_t root = folder.add_vertex();
    for (Word const& w : gens) {
      check_word(alphabet, w);
      if (w.empty()) {
        continue;
      }
      std::size_t u = root;
      for (std::size_t i = 0; i < w.size(); ++i) {
        std::size_t v = (i + 1 == w.size()) ? root : folder.add_vertex();
        folder.add_edge(u, w[i], v);
        u = v;
      }
    }
    folder.fold(options.shuffle_seed);

    // Renumber classes breadth-first from the root so that keys do not depend
    // on the folding order.
    std::vector<std::size_t> order{folder.find(root)};
    std::vector<Vertex>      index(folder.size(), kNoVertex);
    index[order[0]] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t c = 0; c < alphabet.size(); ++c) {
        std::size_t t = folder.slot(order[i], c);
        if (t == Folder::kNone) {
          continue;
        }
        t = folder.find(t);
        if (index[t] == kNoVertex) {
          index[t] = static_cast<Vertex>(order.size());
          order.push_back(t);
        }
      }
    }
    InverseGraph g(alphabet);
    for (std::size_t i = 0; i < order.size(); ++i) {
      g.add_vertex(i == 0 ? "1" : "s" + std::to_string(i));
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t c = 0; c < alphabet.size(); ++c) {
        std::size_t t = folder.slot(order[i], c);
        if (t != Folder::kNone) {
          g.add_arc(static_cast<Vertex>(i), Letter::from_code(c), index[folder.find(t)]);
        }
      }
    }
    RootedGraph cored = core_of(RootedGraph(std::move(g), 0));
    // Re-key after coring so keys stay dense.
    InverseGraph out(alphabet);
    auto const   bfs = reachable(cored.graph, cored.root);
    std::vector<Vertex> renumber(cored.graph.num_vertices(), kNoVertex);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      renumber[bfs[i]] = out.add_vertex(i == 0 ? "1" : "s" + std::to_string(i));
    }
    for (Edge const& e : cored.graph.arcs()) {
      out.add_arc(renumber[e.source], e.label, renumber[e.target]);
    }
    return RootedGraph(std::move(out), 0);
  }

}  // namespace invgraph
