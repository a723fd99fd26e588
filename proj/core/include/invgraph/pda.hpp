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

// Pushdown automata over an involutive input alphabet: running, bounded
// configuration graphs, inverse-PDA validation, the Dyck checker D_y of a
// finite graph and the reversible extension of a positive machine.
//
// Stack words are stored bottom first; a transition replaces the top symbol
// by its push word (empty to pop).

#ifndef INVGRAPH_PDA_HPP_
#define INVGRAPH_PDA_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invgraph/alphabet.hpp"
#include "invgraph/graph.hpp"

namespace invgraph {

  struct PdaTransition {
    std::size_t           from = 0;
    std::optional<Letter> input;  // nullopt for a 1-move
    std::size_t           top = 0;
    std::size_t           to  = 0;
    std::vector<std::size_t> push;

    bool operator==(PdaTransition const&) const = default;
  };

  enum class AcceptMode {
    kFinalState,
    // Final state and nothing above the bottom symbol.
    kFinalStateAndBottom,
  };

  struct Pda {
    Alphabet                   input;
    std::vector<std::string>   states;
    std::vector<std::string>   stack_symbols;
    std::size_t                initial = 0;
    std::size_t                bottom  = 0;
    std::vector<std::size_t>   finals;
    std::vector<PdaTransition> transitions;
    AcceptMode                 accept = AcceptMode::kFinalState;

    std::size_t                ensure_state(std::string const& name);
    std::size_t                ensure_symbol(std::string const& name);
    std::optional<std::size_t> find_state(std::string_view name) const;
    std::optional<std::size_t> find_symbol(std::string_view name) const;
    bool                       is_final(std::size_t state) const;
  };

  struct Configuration {
    std::size_t              state = 0;
    std::vector<std::size_t> stack;

    auto operator<=>(Configuration const&) const = default;
  };

  // "q[bot,a,b']": state, then the stack bottom first.
  std::string format_configuration(Pda const& m, Configuration const& c);

  // Line format:
  //   alphabet a b
  //   stack bot x y
  //   bottom bot
  //   state q0 initial      (also: state q1 final)
  //   final q1
  //   accept final | bottom
  //   trans q0 a x -> q1 x y
  // The input token 1 marks a 1-move. The push word is a list of stack
  // symbols, '-' for the empty word; a single token that is not a symbol is
  // split greedily into the longest matching symbol names. Throws ParseError.
  Pda  read_pda(std::istream& in);
  Pda  read_pda_string(std::string_view text);
  Pda  load_pda(std::string const& path);
  void write_pda(std::ostream& out, Pda const& m);

  // At most one transition per (state, input, top), and no input
  // transitions where a 1-move applies.
  bool is_deterministic(Pda const& m);

  struct RunResult {
    bool                         accepted = false;
    std::optional<Configuration> end;  // nullopt when the run blocks
  };

  // Throws Error if m is not deterministic or loops on 1-moves.
  RunResult run_pda(Pda const& m, Word const& w);

  // Configurations reachable from (q0, bottom) with at most height symbols
  // above the bottom, keyed by format_configuration, rooted at the initial
  // configuration. Configurations with a move beyond the bound are marked
  // truncated. Arcs are added one direction at a time, so for a machine that
  // is not inverse the result fails validate(). Throws Error on 1-moves.
  RootedGraph config_graph(Pda const& m, std::size_t height);

  enum class PdaViolation {
    kNondeterministic,
    kOneMove,
    kHeightChange,
    kMissingReverse,
    kEmptyStack,
  };

  struct PdaIssue {
    PdaViolation kind;
    std::string  detail;
  };

  struct PdaReport {
    std::vector<PdaIssue> issues;

    bool ok() const noexcept {
      return issues.empty();
    }
    bool        has(PdaViolation kind) const;
    std::string to_string() const;
  };

  // Syntactic checks on the transition list, then pairing of δ⁺ and δ⁻ and
  // absence of empty stacks on configurations up to the given height.
  PdaReport validate_inverse_pda(Pda const& m, std::size_t height = 6);

  // D_y: states V(Λ) (named by vertex key), stack alphabet "bot" followed by
  // the letters of Ã, initial and final state y, accepting with only the
  // bottom symbol left.
  Pda dyck_checker_pda(InverseGraph const& lambda, Vertex y);

  // M⁺: the transitions reading positive letters.
  Pda positive_part(Pda const& m);

  // Ñ: adds to a machine with positive transitions only the reverse of each
  // transition, read on the inverse letter. Throws Error for 1-moves,
  // negative letters, or transitions that are not a push, replace or pop.
  Pda reversible_extension(Pda const& n);

}  // namespace invgraph

#endif  // INVGRAPH_PDA_HPP_
