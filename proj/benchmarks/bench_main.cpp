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

#include <benchmark/benchmark.h>

#include <random>

#include "invgraph/analysis.hpp"
#include "invgraph/families.hpp"
#include "invgraph/grammar.hpp"
#include "invgraph/morphisms.hpp"
#include "invgraph/transducers.hpp"

using namespace invgraph;

namespace {
  Word random_word(std::mt19937& rng, Alphabet const& a, std::size_t len) {
    auto const                                 letters = a.letters();
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    Word                                       w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(letters[pick(rng)]);
    }
    return w;
  }

  void BM_Trace(benchmark::State& state) {
    RootedGraph  f2 = free_group_ball(2, 8);
    std::mt19937 rng(1);
    std::vector<Word> words;
    for (int i = 0; i < 256; ++i) {
      words.push_back(random_word(rng, f2.graph.alphabet(), 8));
    }
    std::size_t i = 0;
    for (auto _ : state) {
      benchmark::DoNotOptimize(accepts(f2, words[i++ & 255]));
    }
  }
  BENCHMARK(BM_Trace);

  void BM_StallingsFold(benchmark::State& state) {
    Alphabet const    a = standard_alphabet(3);
    std::mt19937      rng(2);
    std::vector<Word> gens;
    for (int i = 0; i < state.range(0); ++i) {
      gens.push_back(random_word(rng, a, 12));
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(stallings_fold(a, gens));
    }
  }
  BENCHMARK(BM_StallingsFold)->Arg(4)->Arg(16)->Arg(64);

  void BM_Census(benchmark::State& state) {
    RootedGraph z2 = free_abelian_ball(2, static_cast<std::size_t>(state.range(0)) + 3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(end_cone_census(z2, static_cast<std::size_t>(state.range(0)), 3));
    }
  }
  BENCHMARK(BM_Census)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

  void BM_Cyk(benchmark::State& state) {
    Alphabet const a = standard_alphabet(2);
    CnfGrammar     g = dyck_grammar(a);
    std::mt19937   rng(3);
    Word           half = random_word(rng, a, static_cast<std::size_t>(state.range(0)) / 2);
    Word           w    = concat(half, inverse(half));
    for (auto _ : state) {
      benchmark::DoNotOptimize(cyk_member(g, w));
    }
  }
  BENCHMARK(BM_Cyk)->Arg(8)->Arg(16)->Arg(32);

  void BM_WordProblem(benchmark::State& state) {
    GroupAssembly d = dihedral_assembly();
    WordProblem   wp(d, 16);
    std::mt19937  rng(4);
    Word          w = random_word(rng, d.generators, 16);
    for (auto _ : state) {
      benchmark::DoNotOptimize(wp.member(w));
    }
  }
  BENCHMARK(BM_WordProblem);
}  // namespace

BENCHMARK_MAIN();
