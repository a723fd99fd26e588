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

// Shared test helpers: word enumeration, brute-force oracles that avoid the
// library code paths they check, and mt19937 generators.

#ifndef INVGRAPH_TESTS_SUPPORT_HPP_
#define INVGRAPH_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "invgraph/alphabet.hpp"
#include "invgraph/graph.hpp"
#include "invgraph/metric.hpp"
#include "invgraph/morphisms.hpp"

namespace invgraph::testing {

  inline Word w(Alphabet const& a, std::string const& text) {
    return parse_word(a, text);
  }

  // Every word of length 0..max_len over Ã, shortlex.
  inline void for_each_word(Alphabet const&                         a,
                            std::size_t                             max_len,
                            std::function<void(Word const&)> const& fn) {
    std::vector<Letter> const letters = a.letters();
    Word                      cur;
    std::function<void(std::size_t)> rec = [&](std::size_t len) {
      if (cur.size() == len) {
        fn(cur);
        return;
      }
      for (Letter l : letters) {
        cur.push_back(l);
        rec(len);
        cur.pop_back();
      }
    };
    for (std::size_t len = 0; len <= max_len; ++len) {
      rec(len);
    }
  }

  inline std::size_t count_words(Alphabet const& a, std::size_t max_len) {
    std::size_t n = 0, p = 1;
    for (std::size_t len = 0; len <= max_len; ++len, p *= a.size()) {
      n += p;
    }
    return n;
  }

  // Stack reducer working on raw codes.
  inline std::vector<std::size_t> reduce_codes(Word const& w) {
    std::vector<std::size_t> stack;
    for (Letter l : w) {
      if (!stack.empty() && (stack.back() ^ 1u) == l.code()) {
        stack.pop_back();
      } else {
        stack.push_back(l.code());
      }
    }
    return stack;
  }

  inline bool is_trivial_in_free_group(Word const& w) {
    return reduce_codes(w).empty();
  }

  // Exponent sum of positive letter i.
  inline long exponent_sum(Word const& w, std::size_t i) {
    long s = 0;
    for (Letter l : w) {
      if (l.index() == i) {
        s += l.is_positive() ? 1 : -1;
      }
    }
    return s;
  }

  inline Word random_word(std::mt19937& rng, Alphabet const& a, std::size_t len) {
    std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
    Word                                       out;
    for (std::size_t i = 0; i < len; ++i) {
      out.push_back(Letter::from_code(pick(rng)));
    }
    return out;
  }

  inline Word random_reduced_word(std::mt19937& rng, Alphabet const& a, std::size_t len) {
    std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
    Word                                       out;
    while (out.size() < len) {
      Letter l = Letter::from_code(pick(rng));
      if (out.empty() || out.back() != l.inverse()) {
        out.push_back(l);
      }
    }
    return out;
  }

  // A finite inverse graph: Stallings graph of a few random words.
  inline RootedGraph random_stallings(std::mt19937& rng, Alphabet const& a) {
    std::uniform_int_distribution<std::size_t> count(1, 3), len(1, 5);
    std::vector<Word>                          gens;
    for (std::size_t i = count(rng); i > 0; --i) {
      Word g = random_reduced_word(rng, a, len(rng));
      gens.push_back(std::move(g));
    }
    return stallings_fold(a, gens);
  }

  // Random connected inverse graph on n vertices: each new vertex hangs off
  // an earlier one, then random chords where both slots are free.
  inline RootedGraph random_inverse_graph(std::mt19937& rng, Alphabet const& a, std::size_t n) {
    InverseGraph g(a);
    g.add_vertex("v0");
    std::uniform_int_distribution<std::size_t> letter(0, a.size() - 1);
    auto free_pair = [&](Vertex u, Letter l, Vertex v) {
      return !g.has_edge(u, l) && !g.has_edge(v, l.inverse());
    };
    while (g.num_vertices() < n) {
      std::vector<std::pair<Vertex, Letter>> slots;
      for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (Letter l : a.letters()) {
          if (!g.has_edge(u, l)) {
            slots.emplace_back(u, l);
          }
        }
      }
      if (slots.empty()) {
        break;
      }
      auto [u, l] = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
      Vertex v    = g.add_vertex("v" + std::to_string(g.num_vertices()));
      g.add_edge(u, l, v);
    }
    std::uniform_int_distribution<Vertex> vertex(0, static_cast<Vertex>(g.num_vertices() - 1));
    for (std::size_t i = 0; i < n; ++i) {
      Vertex u = vertex(rng), v = vertex(rng);
      Letter l = Letter::from_code(letter(rng));
      if (free_pair(u, l, v)) {
        g.add_edge(u, l, v);
      }
    }
    return RootedGraph(std::move(g), 0);
  }

  // BFS distances over the adjacency relation, without the library metric.
  inline std::vector<std::size_t> bfs_oracle(InverseGraph const& g, Vertex s) {
    std::vector<std::size_t> d(g.num_vertices(), static_cast<std::size_t>(-1));
    std::vector<Vertex>      q{s};
    d[s] = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (Edge const& e : g.arcs()) {
        if (e.source == q[i] && d[e.target] == static_cast<std::size_t>(-1)) {
          d[e.target] = d[q[i]] + 1;
          q.push_back(e.target);
        }
      }
    }
    return d;
  }

#ifdef INVGRAPH_TEST_GOLDEN
  // A golden table without its '#' comment lines; empty if unreadable.
  inline std::string read_golden(std::string const& name) {
    std::ifstream in(std::string(INVGRAPH_TEST_GOLDEN) + "/" + name);
    std::string   line, out;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] != '#') {
        out += line + "\n";
      }
    }
    return out;
  }
#endif

}  // namespace invgraph::testing

#endif  // INVGRAPH_TESTS_SUPPORT_HPP_
