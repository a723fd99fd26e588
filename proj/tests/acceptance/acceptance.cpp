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

// Runs the end-to-end checks and prints one PASS/FAIL line each. Exit code
// is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "invgraph/analysis.hpp"
#include "invgraph/decomposition.hpp"
#include "invgraph/error.hpp"
#include "invgraph/families.hpp"
#include "invgraph/grammar.hpp"
#include "invgraph/metric.hpp"
#include "invgraph/morphisms.hpp"
#include "invgraph/pda.hpp"
#include "invgraph/quotients.hpp"
#include "invgraph/transducers.hpp"
#include "support.hpp"

using namespace invgraph;
using testing::for_each_word;

namespace {
  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  // every graph built below goes through here
  struct Registry {
    std::size_t seen = 0;
    std::vector<std::string> bad;

    RootedGraph operator()(RootedGraph rg, std::string const& what) {
      ++seen;
      ValidationReport r = validate(rg.graph);
      if (!r.ok()) {
        bad.push_back(what + ": " + r.to_string());
      }
      return rg;
    }
  } checked;

  Outcome free_group_word_problem() {
    RootedGraph const& f2 = checked(free_group_ball(2, 8), "free_group(2,8)");
    std::size_t        words = 0, trivial = 0, wrong = 0;
    for_each_word(f2.graph.alphabet(), 8, [&](Word const& w) {
      ++words;
      bool const expect = free_reduce(w).empty();
      trivial += expect ? 1 : 0;
      if (accepts(f2, w) != expect) {
        ++wrong;
      }
    });
    return {wrong == 0, std::to_string(words) + " words, " + std::to_string(trivial)
                            + " trivial, " + std::to_string(wrong) + " disagreements"};
  }

  Outcome census_separation() {
    auto summary = [](Census const& c) {
      std::ostringstream out;
      write_census_summary(out, c);
      return out.str();
    };
    auto gold = [](std::string const& name) { return testing::read_golden(name); };
    bool        ok = true;
    std::string detail;

    Census f2 = end_cone_census(checked(free_group_ball(2, 8), "free_group(2,8)"), 5, 3);
    ok &= summary(f2) == gold("census_f2_r8_n5_d3.tsv") && f2.cumulative.back() == 1;
    detail += "F2 " + std::to_string(f2.cumulative.back());

    Census z2 = end_cone_census(checked(free_abelian_ball(2, 8), "free_abelian(2,8)"), 5, 3);
    ok &= summary(z2) == gold("census_z2_r8_n5_d3.tsv");
    detail += ", Z2";
    for (std::size_t n = 1; n <= 5; ++n) {
      detail += " " + std::to_string(z2.cumulative[n]);
      if (n >= 2) {
        ok &= z2.cumulative[n] > z2.cumulative[n - 1];
      }
    }

    std::size_t last = 0;
    detail += ", bicyclic";
    for (std::size_t n : {10, 17, 25}) {
      RootedGraph const& t = checked(bicyclic_tree(n), "bicyclic_tree(" + std::to_string(n) + ")");
      Census             c = end_cone_census(t, n - 8, 8);
      ok &= summary(c) == gold("census_bicyclic_" + std::to_string(n) + "_d8.tsv");
      ok &= c.cumulative.back() > last;
      last = c.cumulative.back();
      detail += " " + std::to_string(last);
    }
    return {ok, detail};
  }

  Outcome covering_laws() {
    RootedGraph const& line = checked(free_abelian_ball(1, 20), "Z line");
    Alphabet const&    a    = line.graph.alphabet();
    bool               ok   = true;
    std::size_t        circuits = 0;
    for (long k = 2; k <= 5; ++k) {
      SubgroupAction h = lattice_translations(line, {k});
      DvQuotient     q = dv_quotient(line, h.orbit);
      checked(q.quotient, "Z/" + std::to_string(k));
      ok &= q.quotient.graph.num_vertices() == static_cast<std::size_t>(k);
      ok &= q.saturated;
      ok &= is_cover(line.graph, q.quotient.graph, q.projection).is_cover;

      std::vector<Word> loops;
      for_each_word(a, 8, [&](Word const& w) {
        if (!accepts(q.quotient, w)) {
          return;
        }
        loops.push_back(w);
        Walk lift  = lift_walk(line.graph, q.quotient.graph, q.projection, line.root, w);
        auto again = trace_walk(line.graph, line.root, w);
        ok &= again && again->vertices == lift.vertices;
        for (std::size_t i = 0; i < lift.vertices.size(); ++i) {
          auto down = trace(q.quotient.graph, q.quotient.root,
                            Word(w.begin(), w.begin() + static_cast<long>(i)));
          ok &= down && q.class_of(lift.vertices[i]) == *down;
        }
        bool const trivial = eta_evaluate(q, h, w) == h.identity;
        ok &= trivial == accepts(line, w);
      });
      circuits += loops.size();
      for (Word const& u : loops) {
        for (Word const& v : loops) {
          if (u.size() + v.size() > 8) {
            continue;
          }
          ok &= eta_evaluate(q, h, concat(u, v))
                == h.compose(eta_evaluate(q, h, u), eta_evaluate(q, h, v));
        }
      }
    }
    return {ok, "k = 2..5, " + std::to_string(circuits) + " quotient circuits"};
  }

  Outcome dyck_checker() {
    Alphabet const           ab = standard_alphabet(2);
    std::vector<RootedGraph> lambdas = {
        bouquet({"a", "b"}),
        cycle_graph(3),
        stallings_fold(ab, {testing::w(ab, "a a"), testing::w(ab, "b")}),
    };
    bool        ok   = lambdas[2].graph.num_vertices() == 2;
    std::size_t runs = 0;
    for (RootedGraph const& rg : lambdas) {
      checked(rg, "Λ");
      for (Vertex y = 0; y < rg.graph.num_vertices(); ++y) {
        Pda d = dyck_checker_pda(rg.graph, y);
        for_each_word(rg.graph.alphabet(), 8, [&](Word const& w) {
          ++runs;
          ok &= run_pda(d, w).accepted == is_dyck_at(rg.graph, y, w);
        });
        ok &= validate_inverse_pda(d).ok();
        checked(config_graph(d, 4), "configurations of D_y");
      }
    }
    return {ok, std::to_string(runs) + " runs"};
  }

  Outcome k_bounds() {
    bool        ok = true;
    std::string detail;
    for (std::size_t rank : {1, 2}) {
      RootedGraph const& rg = checked(free_group_ball(rank, 8), "free_group ball");
      CnfGrammar const   g  = dyck_grammar(rg.graph.alphabet());
      std::size_t const  K  = shortest_words(g).K;
      ok &= K == 2;

      std::map<Vertex, std::vector<std::size_t>> dist;
      auto d = [&](Vertex u, Vertex v) {
        auto it = dist.find(u);
        if (it == dist.end()) {
          it = dist.emplace(u, distances_from(rg.graph, u)).first;
        }
        return it->second[v];
      };
      std::size_t circuits = 0, edges = 0, worst = 0;
      for_each_word(rg.graph.alphabet(), 8, [&](Word const& w) {
        if (!accepts(rg, w)) {
          return;
        }
        ++circuits;
        auto tree = cyk_member(g, w);
        if (!tree) {
          ok = false;
          return;
        }
        if (w.empty()) {
          return;
        }
        for (auto const& e : triangulate_circuit(g, *tree, *trace_walk(rg.graph, rg.root, w))) {
          ++edges;
          worst = std::max(worst, d(e.from_vertex, e.to_vertex));
        }
      });
      ok &= worst <= K;

      auto const  nrm      = norms(rg);
      std::size_t frontier = 0;
      for (Vertex v = 0; v < rg.graph.num_vertices(); ++v) {
        if (nrm[v] == 0 || nrm[v] >= 8) {
          continue;
        }
        EndCone             c = end_cone(rg, v);
        std::vector<Vertex> base;
        for (Vertex f : c.frontier) {
          base.push_back(c.to_base[f]);
        }
        frontier = std::max(frontier, diameter_of(rg.graph, base));
      }
      ok &= frontier <= 3 * K;
      detail += (detail.empty() ? "" : "; ") + std::string("rank ") + std::to_string(rank) + ": "
                + std::to_string(circuits) + " circuits, " + std::to_string(edges)
                + " V-edges, max span " + std::to_string(worst) + ", max frontier diameter "
                + std::to_string(frontier);
    }
    return {ok, detail};
  }

  Outcome tree_likeness() {
    bool        ok = true;
    std::string detail;
    RootedGraph const& f2 = checked(free_group_ball(2, 6), "free_group(2,6)");
    StrongTreePartition singletons;
    for (Vertex v = 0; v < f2.graph.num_vertices(); ++v) {
      singletons.blocks.push_back({v});
    }
    StrongTreeReport r = verify_strong_tree_decomposition(f2.graph, singletons);
    ok &= r.valid() && r.max_block_diameter == 0;
    ok &= r.augmented_report.valid() && r.augmented_report.max_bag_diameter <= 2;
    detail += "partition ok " + std::to_string(r.valid()) + ", augmented diameter "
              + std::to_string(r.augmented_report.max_bag_diameter);

    // δ = 3K on the tree ball, at every vertex where the check is defined
    std::size_t const delta = 6;
    std::size_t       defined = 0;
    for (Vertex v = 0; v < f2.graph.num_vertices(); ++v) {
      try {
        ok &= cone_separation_check(f2, v, delta);
        ++defined;
      } catch (TrustError const&) {
      } catch (Error const&) {
      }
    }
    detail += ", tree delta 6 defined at " + std::to_string(defined) + " vertices";

    RootedGraph const& z2 = checked(free_abelian_ball(2, 8), "free_abelian(2,8)");
    try {
      bool sep = cone_separation_check(z2, z2.graph.vertex("2,0"), 2);
      ok &= !sep;
      detail += ", Z2 (2,0) delta 2 " + std::string(sep ? "holds" : "fails");
    } catch (Error const& e) {
      ok = false;
      detail += ", Z2 (2,0) delta 2: " + std::string(e.what());
    }
    return {ok, detail};
  }

  Outcome transducer_laws() {
    bool        ok   = true;
    std::size_t laws = 0;
    auto        law  = [&](InverseTransducer const& a, RootedGraph const& rg) {
      RootedGraph const& prod = checked(product(a, rg), "product");
      for_each_word(a.input, 6, [&](Word const& s) {
        ++laws;
        auto h = transduce(a, s);
        ok &= accepts(prod, s) == (h && accepts(rg, *h));
      });
    };

    Alphabet const    ab = standard_alphabet(2);
    InverseTransducer id;
    id.input = id.output = ab;
    id.states            = {"1"};
    for (Letter l : ab.letters()) {
      id.edges.push_back({0, l, Word{l}, 0});
    }
    law(id, checked(free_abelian_ball(2, 8), "free_abelian(2,8)"));

    GroupAssembly const     dinf = dihedral_assembly();
    InverseTransducer const d    = build_group_transducer(dinf);
    law(d, checked(free_group_ball(Alphabet({"x"}), 8), "free_group(x,8)"));
    law(d, checked(cycle_graph(3, "x"), "cycle(3,x)"));

    // x: k -> k + 1, s: k -> -k
    std::size_t words = 0;
    WordProblem dwp(dinf, 10);
    for_each_word(dinf.generators, 10, [&](Word const& w) {
      ++words;
      long sign = 1, shift = 0;
      for (Letter l : w) {
        if (dinf.generators.name(l).front() == 'x') {
          shift += l.is_positive() ? 1 : -1;
        } else {
          sign  = -sign;
          shift = -shift;
        }
      }
      ok &= dwp.member(w) == (sign == 1 && shift == 0);
    });

    GroupAssembly const zz = z2_assembly();
    WordProblem         zwp(zz, 10);
    for_each_word(zz.generators, 10, [&](Word const& w) {
      ++words;
      bool const expect = testing::exponent_sum(w, 0) == 0 && testing::exponent_sum(w, 1) == 0;
      ok &= zwp.member(w) == expect;
    });
    // the one-shot entry point on a smaller range
    for_each_word(dinf.generators, 5, [&](Word const& w) {
      ok &= wp_member(dinf, w) == dwp.member(w);
    });
    return {ok, std::to_string(laws) + " language-law words, " + std::to_string(words)
                    + " word-problem words"};
  }

  Outcome validation_suite() {
    std::string detail = std::to_string(checked.seen) + " graphs validated";
    for (std::string const& b : checked.bad) {
      detail += "; " + b;
    }
    return {checked.bad.empty() && checked.seen > 0, detail};
  }
}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria = {
      {"free group word problem", free_group_word_problem},
      {"census separation", census_separation},
      {"covering laws", covering_laws},
      {"dyck checker", dyck_checker},
      {"K bounds", k_bounds},
      {"tree-likeness verifiers", tree_likeness},
      {"transducer laws", transducer_laws},
      {"validation suite", validation_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto    start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures;
}
