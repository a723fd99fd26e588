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

#include "invgraph/families.hpp"

#include <charconv>

#include "invgraph/error.hpp"

namespace invgraph {

  RootedGraph free_group_ball(Alphabet const& alphabet, std::size_t radius) {
    InverseGraph      g(alphabet);
    std::vector<Word> words{{}};
    g.add_vertex("1");
    auto key = [&](Word const& w) { return format_word(alphabet, w, ""); };
    for (std::size_t i = 0; i < words.size(); ++i) {
      Word const w = words[i];
      if (w.size() == radius) {
        g.set_truncated(static_cast<Vertex>(i));
        continue;
      }
      for (Letter a : alphabet.letters()) {
        if (!w.empty() && w.back() == a.inverse()) {
          continue;
        }
        Word next = w;
        next.push_back(a);
        Vertex v = g.add_vertex(key(next));
        g.add_edge(static_cast<Vertex>(i), a, v);
        words.push_back(std::move(next));
      }
    }
    return RootedGraph(std::move(g), 0);
  }

  RootedGraph free_group_ball(std::size_t rank, std::size_t radius) {
    return free_group_ball(standard_alphabet(rank), radius);
  }

  namespace {
    std::string coordinates(std::vector<long> const& x) {
      std::string out;
      for (std::size_t i = 0; i < x.size(); ++i) {
        out += (i ? "," : "") + std::to_string(x[i]);
      }
      return out;
    }

    long l1(std::vector<long> const& x) {
      long n = 0;
      for (long c : x) {
        n += c < 0 ? -c : c;
      }
      return n;
    }
  }  // namespace

  RootedGraph free_abelian_ball(std::size_t rank, std::size_t radius) {
    Alphabet const alphabet = standard_alphabet(rank);
    InverseGraph   g(alphabet);
    std::vector<std::vector<long>> points{std::vector<long>(rank, 0)};
    g.add_vertex(coordinates(points[0]));
    auto const r = static_cast<long>(radius);
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<long> const x = points[i];
      if (l1(x) == r) {
        g.set_truncated(static_cast<Vertex>(i));
      }
      for (Letter a : alphabet.letters()) {
        std::vector<long> y = x;
        y[a.index()] += a.is_positive() ? 1 : -1;
        if (l1(y) > r) {
          continue;
        }
        std::string const k = coordinates(y);
        auto              v = g.find_vertex(k);
        if (!v) {
          v = g.add_vertex(k);
          points.push_back(std::move(y));
        }
        if (!g.has_edge(static_cast<Vertex>(i), a)) {
          g.add_edge(static_cast<Vertex>(i), a, *v);
        }
      }
    }
    return RootedGraph(std::move(g), 0);
  }

  RootedGraph cycle_graph(std::size_t n, std::string const& letter) {
    if (n == 0) {
      throw Error("cycle needs at least one vertex");
    }
    InverseGraph g(Alphabet({letter}));
    for (std::size_t i = 0; i < n; ++i) {
      g.add_vertex(std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
      g.add_edge(static_cast<Vertex>(i), Letter::positive(0), static_cast<Vertex>((i + 1) % n));
    }
    return RootedGraph(std::move(g), 0);
  }

  RootedGraph bouquet(std::vector<std::string> const& letters) {
    InverseGraph g{Alphabet(letters)};
    Vertex       v = g.add_vertex("v");
    for (std::size_t i = 0; i < letters.size(); ++i) {
      g.add_edge(v, Letter::positive(i), v);
    }
    return RootedGraph(std::move(g), v);
  }

  RootedGraph bicyclic_tree(std::size_t n) {
    InverseGraph g(Alphabet({"a", "b", "c"}));
    Letter const a = Letter::positive(0), b = Letter::positive(1), c = Letter::positive(2);
    Vertex const root = g.add_vertex("x0");
    g.add_edge(root, a, g.add_vertex("a"));
    Vertex prev = root;
    std::vector<Vertex> ray{root};
    for (std::size_t k = 1; k <= n; ++k) {
      Vertex v = g.add_vertex("b" + std::to_string(k));
      g.add_edge(prev, b, v);
      ray.push_back(v);
      prev = v;
    }
    for (std::size_t m = 1; m * m <= n; ++m) {
      std::size_t const k = m * m;
      g.add_edge(ray[k], c, g.add_vertex("c" + std::to_string(k)));
    }
    if (n > 0) {
      g.set_truncated(ray[n]);
    }
    return RootedGraph(std::move(g), root);
  }

  GroupAssembly dihedral_assembly() {
    return read_assembly_string(
        "generators x s\n"
        "transversal 1 s\n"
        "row 1 x -> x 1\n"
        "row 1 s -> - s\n"
        "row s x -> x' s\n"
        "row s s -> - 1\n"
        "proj 1 x -> x\n");
  }

  GroupAssembly z2_assembly() {
    return read_assembly_string(
        "generators x y\n"
        "transversal 1\n"
        "row 1 x -> x 1\n"
        "row 1 y -> y 1\n"
        "proj 1 x -> x\n"
        "proj 1 y -> -\n"
        "proj 2 x -> -\n"
        "proj 2 y -> y\n");
  }

  namespace {
    std::size_t parse_count(std::string const& s, char const* what) {
      std::size_t value = 0;
      auto [end, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || end != s.data() + s.size()) {
        throw Error(std::string("bad ") + what + " '" + s + "'");
      }
      return value;
    }
  }  // namespace

  FamilySpec parse_family(std::vector<std::string> const& args) {
    if (args.empty()) {
      throw Error("missing family name");
    }
    FamilySpec spec{args[0], {}, {}};
    std::size_t const extra = args.size() - 1;
    auto              need  = [&](std::size_t n, char const* usage) {
      if (extra != n) {
        throw Error(std::string("usage: ") + usage);
      }
    };
    if (spec.name == "free_group" || spec.name == "free_abelian") {
      need(2, (spec.name + " RANK RADIUS").c_str());
      spec.params = {parse_count(args[1], "rank"), parse_count(args[2], "radius")};
      if (spec.params[0] < 1) {
        throw Error("rank must be at least 1");
      }
    } else if (spec.name == "cycle") {
      if (extra != 1 && extra != 2) {
        throw Error("usage: cycle N [LETTER]");
      }
      spec.params  = {parse_count(args[1], "modulus")};
      spec.letters = {extra == 2 ? args[2] : std::string("a")};
      if (spec.params[0] < 2) {
        throw Error("modulus must be at least 2");
      }
    } else if (spec.name == "bouquet") {
      if (extra == 0) {
        throw Error("usage: bouquet LETTER...");
      }
      spec.letters.assign(args.begin() + 1, args.end());
    } else if (spec.name == "bicyclic_tree") {
      need(1, "bicyclic_tree N");
      spec.params = {parse_count(args[1], "length")};
    } else if (spec.name == "dihedral_assembly" || spec.name == "z2_assembly") {
      need(0, spec.name.c_str());
    } else {
      throw Error("unknown family '" + spec.name + "'");
    }
    return spec;
  }

  FamilyOutput make(FamilySpec const& spec) {
    auto param = [&](std::size_t i) {
      if (i >= spec.params.size()) {
        throw Error("family '" + spec.name + "' is missing parameters");
      }
      return spec.params[i];
    };
    if (spec.name == "free_group") {
      return free_group_ball(param(0), param(1));
    }
    if (spec.name == "free_abelian") {
      return free_abelian_ball(param(0), param(1));
    }
    if (spec.name == "cycle") {
      return cycle_graph(param(0), spec.letters.empty() ? "a" : spec.letters[0]);
    }
    if (spec.name == "bouquet") {
      return bouquet(spec.letters);
    }
    if (spec.name == "bicyclic_tree") {
      return bicyclic_tree(param(0));
    }
    if (spec.name == "dihedral_assembly") {
      return dihedral_assembly();
    }
    if (spec.name == "z2_assembly") {
      return z2_assembly();
    }
    throw Error("unknown family '" + spec.name + "'");
  }

}  // namespace invgraph
