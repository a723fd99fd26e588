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

// Inverse transducers, their product with inverse graphs, the coset
// transducer of a group assembled from a finite-index subgroup, and word
// problem membership as an intersection of transducer preimages.

#ifndef INVGRAPH_TRANSDUCERS_HPP_
#define INVGRAPH_TRANSDUCERS_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invgraph/alphabet.hpp"
#include "invgraph/graph.hpp"

namespace invgraph {

  struct TransducerEdge {
    std::size_t from = 0;
    Letter      input;
    Word        output;
    std::size_t to = 0;
  };

  struct InverseTransducer {
    Alphabet                    input;   // Y
    Alphabet                    output;  // X
    std::vector<std::string>    states;
    std::size_t                 root = 0;
    std::vector<TransducerEdge> edges;

    // Edge leaving p on y, if any.
    TransducerEdge const* edge(std::size_t p, Letter y) const;
  };

  // Missing reverse edges (p2 --y⁻¹ | u⁻¹--> p1) and determinism clashes.
  std::vector<std::string> transducer_issues(InverseTransducer const& a);

  struct TransducerRun {
    std::optional<std::size_t> end;  // nullopt when some step has no edge
    Word                       output;
  };

  TransducerRun run_transducer(InverseTransducer const& a, Word const& s);

  // The output of the circuit p0 --s | h--> p0, nullopt unless s labels a
  // circuit at the root. Outputs are concatenated without reduction.
  std::optional<Word> transduce(InverseTransducer const& a, Word const& s);

  // A ⋉ Γ: the component of (p0, x0), with (p1, q1) --y--> (p2, q2) when
  // p1 --y | u--> p2 and u walks q1 to q2. Keys are "p:q". Vertices where
  // some output runs into truncation are marked truncated.
  RootedGraph product(InverseTransducer const& a, RootedGraph const& rg);

  // Text format:
  //   input s x
  //   output x
  //   state 1 s            (the first state is the root)
  //   edge 1 s -> - s      (edge STATE INPUT -> OUTPUT... STATE)
  // Reverse edges are added when absent. Throws ParseError, including for
  // tables that fail transducer_issues.
  InverseTransducer read_transducer(std::istream& in);
  InverseTransducer read_transducer_string(std::string_view text);
  InverseTransducer load_transducer(std::string const& path);

  struct AssemblyRow {
    std::size_t t = 0;
    Letter      y;
    Word        h;  // over X̃
    std::size_t next = 0;
  };

  struct Projection {
    Alphabet          target;  // Z_i
    std::vector<Word> image;   // per positive letter of X
  };

  struct GroupAssembly {
    Alphabet                   generators;   // Y = X ∪ (T ∖ {1})
    Alphabet                   subgroup;     // X
    std::vector<std::string>   transversal;  // T, "1" first
    std::vector<AssemblyRow>   rows;         // total on T × Ỹ
    std::vector<Projection>    projections;
    std::optional<std::size_t> radius;       // radius of the Γ_i balls
  };

  // Text format:
  //   generators x s
  //   transversal 1 s
  //   row 1 x -> x 1        (row T Y -> H... T', H '-' when empty)
  //   proj 1 x -> x         (proj I X -> WORD, '-' for the empty word)
  //   radius 12             (optional)
  // X is the set of generators that are not transversal elements. Rows for
  // inverse letters are derived from the given ones (t' y⁻¹ -> h⁻¹ t); a
  // derived row that contradicts a given one, or a missing row, is a
  // ParseError. Z_i consists of the letters used by the images of proj i.
  GroupAssembly read_assembly(std::istream& in);
  GroupAssembly read_assembly_string(std::string_view text);
  GroupAssembly load_assembly(std::string const& path);
  void          write_assembly(std::ostream& out, GroupAssembly const& asm_);

  // Throws Error when the table is not total, not deterministic, or lacks
  // the reverse of a row.
  void check_assembly(GroupAssembly const& asm_);

  // States T rooted at 1, one edge t --y | h_{t,y}--> t' per row.
  InverseTransducer build_group_transducer(GroupAssembly const& asm_);

  // Word problem of the assembled group: the transducer output h is defined
  // and every projection π_i(h), freely reduced, is accepted by a free group
  // ball over Z_i. Builds the transducer and balls once; balls have the
  // assembly radius or the given one.
  class WordProblem {
   public:
    WordProblem(GroupAssembly asm_, std::size_t radius);

    // Throws TrustError when a projected word leaves its ball.
    bool member(Word const& w) const;

    InverseTransducer const& transducer() const noexcept {
      return transducer_;
    }

   private:
    GroupAssembly            asm_;
    InverseTransducer        transducer_;
    std::vector<RootedGraph> balls_;
  };

  // One-shot membership; without an assembly radius the balls are sized for
  // the longest possible image of w.
  bool wp_member(GroupAssembly const& asm_, Word const& w);

  Word apply_projection(Projection const& p, Word const& h);

}  // namespace invgraph

#endif  // INVGRAPH_TRANSDUCERS_HPP_
