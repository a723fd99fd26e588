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

#include "invgraph/derivation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "invgraph/error.hpp"

namespace invgraph {

  namespace {
    // dyck[i][k]: w[i, k) ∈ D(Λ, y).
    std::vector<std::vector<char>> dyck_segments(InverseGraph const& lambda,
                                                 Vertex              y,
                                                 Word const&         w) {
      std::size_t const              n = w.size();
      std::vector<std::vector<char>> out(n + 1, std::vector<char>(n + 1, 0));
      for (std::size_t i = 0; i <= n; ++i) {
        out[i][i]         = 1;
        Vertex      at    = y;
        Word        stack;
        for (std::size_t k = i; k < n && at != kNoVertex; ++k) {
          at = lambda.target(at, w[k]);
          if (!stack.empty() && stack.back() == w[k].inverse()) {
            stack.pop_back();
          } else {
            stack.push_back(w[k]);
          }
          out[i][k + 1] = at != kNoVertex && stack.empty();
        }
      }
      return out;
    }

    bool shortlex_less(Word const& a, Word const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
  }  // namespace

  bool derivable(InverseGraph const& lambda, Vertex y0, Word const& w, Word const& s) {
    auto walk = trace_walk(lambda, y0, s);
    if (!walk) {
      throw Error("base word does not label a walk from the start vertex");
    }
    check_word(lambda.alphabet(), w);
    std::size_t const n = w.size();
    std::size_t const m = s.size();
    // reach[j][i]: w[0, i) is derivable from s[0, j) ending at a letter
    // boundary (before the Dyck segment at y_j).
    std::vector<std::vector<char>> reach(m + 1, std::vector<char>(n + 1, 0));
    reach[0][0] = 1;
    for (std::size_t j = 0; j <= m; ++j) {
      auto const dyck = dyck_segments(lambda, walk->vertices[j], w);
      for (std::size_t i = 0; i <= n; ++i) {
        if (!reach[j][i]) {
          continue;
        }
        for (std::size_t k = i; k <= n; ++k) {
          if (!dyck[i][k]) {
            continue;
          }
          if (j == m) {
            if (k == n) {
              return true;
            }
          } else if (k < n && w[k] == s[j]) {
            reach[j + 1][k + 1] = 1;
          }
        }
      }
    }
    return false;
  }

  std::vector<Word> derivation_bases(InverseGraph const& lambda, Vertex y0, Word const& w) {
    lambda.check_vertex(y0);
    check_word(lambda.alphabet(), w);
    std::size_t const n = w.size();
    std::map<Vertex, std::vector<std::vector<char>>> dyck;
    auto segments = [&](Vertex y) -> std::vector<std::vector<char>> const& {
      auto it = dyck.find(y);
      if (it == dyck.end()) {
        it = dyck.emplace(y, dyck_segments(lambda, y, w)).first;
      }
      return it->second;
    };
    // Suffix sets: bases of w[i, n) from y.
    std::map<std::pair<std::size_t, Vertex>, std::set<Word>> memo;
    auto suffixes = [&](auto& self, std::size_t i, Vertex y) -> std::set<Word> const& {
      auto key = std::make_pair(i, y);
      if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
      }
      std::set<Word> out;
      if (i == n) {
        out.insert(Word{});
      } else {
        if (Vertex next = lambda.target(y, w[i]); next != kNoVertex) {
          for (Word const& rest : self(self, i + 1, next)) {
            Word word{w[i]};
            word.insert(word.end(), rest.begin(), rest.end());
            out.insert(std::move(word));
          }
        }
        auto const& d = segments(y);
        for (std::size_t k = i + 1; k <= n; ++k) {
          if (d[i][k]) {
            auto const& rest = self(self, k, y);
            out.insert(rest.begin(), rest.end());
          }
        }
      }
      return memo.emplace(key, std::move(out)).first->second;
    };
    auto const&       all = suffixes(suffixes, 0, y0);
    std::vector<Word> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
  }

  bool closure_member(CnfGrammar const& g, InverseGraph const& lambda, Vertex y0, Word const& w) {
    if (!(g.terminals == lambda.alphabet())) {
      throw Error("grammar and graph use different alphabets");
    }
    for (Word const& s : derivation_bases(lambda, y0, w)) {
      if (cyk_member(g, s)) {
        return true;
      }
    }
    return false;
  }

  std::vector<Word> spanning_basis(RootedGraph const& rg) {
    InverseGraph const& g = rg.graph;
    // path[v]: tree path label from the root to v.
    std::vector<Word>  path(g.num_vertices());
    std::vector<char>  seen(g.num_vertices(), 0);
    std::vector<Edge>  tree_edges;
    std::vector<Vertex> queue{rg.root};
    seen[rg.root] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex u = queue[i];
      for (Letter a : g.alphabet().letters()) {
        Vertex v = g.target(u, a);
        if (v != kNoVertex && !seen[v]) {
          seen[v] = 1;
          path[v] = path[u];
          path[v].push_back(a);
          tree_edges.push_back({u, a, v});
          tree_edges.push_back({v, a.inverse(), u});
          queue.push_back(v);
        }
      }
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    std::vector<Word> basis;
    for (Edge const& e : g.positive_edges()) {
      if (std::binary_search(tree_edges.begin(), tree_edges.end(), e)) {
        continue;
      }
      Word w = path[e.source];
      w.push_back(e.label);
      Word back = inverse(path[e.target]);
      w.insert(w.end(), back.begin(), back.end());
      basis.push_back(free_reduce(w));
    }
    return basis;
  }

}  // namespace invgraph
