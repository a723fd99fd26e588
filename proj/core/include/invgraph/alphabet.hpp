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

// Involutive alphabets and words over them.
//
// A positive letter with index i is encoded as 2i and its formal inverse as
// 2i + 1, so inversion is a single xor and the involution is fixed-point free
// by construction. In text a positive letter is an identifier and its inverse
// is the identifier followed by an apostrophe: a' is the inverse of a.

#ifndef INVGRAPH_ALPHABET_HPP_
#define INVGRAPH_ALPHABET_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace invgraph {

  class Letter {
   public:
    constexpr Letter() noexcept = default;

    static constexpr Letter positive(std::size_t index) noexcept {
      return Letter(static_cast<std::uint32_t>(index << 1));
    }
    static constexpr Letter negative(std::size_t index) noexcept {
      return Letter(static_cast<std::uint32_t>((index << 1) | 1u));
    }
    static constexpr Letter from_code(std::size_t code) noexcept {
      return Letter(static_cast<std::uint32_t>(code));
    }

    // Position in the closed alphabet A ∪ A⁻¹ (a, a', b, b', ...).
    constexpr std::size_t code() const noexcept {
      return code_;
    }
    // Index of the underlying positive letter.
    constexpr std::size_t index() const noexcept {
      return code_ >> 1;
    }
    constexpr bool is_positive() const noexcept {
      return (code_ & 1u) == 0;
    }
    constexpr Letter inverse() const noexcept {
      return Letter(code_ ^ 1u);
    }

    constexpr auto operator<=>(Letter const&) const noexcept = default;

   private:
    constexpr explicit Letter(std::uint32_t code) noexcept : code_(code) {}
    std::uint32_t code_ = 0;
  };

  // A word over the closed alphabet; the empty word is the identity 1.
  using Word = std::vector<Letter>;

  class Alphabet {
   public:
    Alphabet() = default;
    // Throws AlphabetError on duplicate or malformed names.
    explicit Alphabet(std::vector<std::string> positive_names);

    // Number of positive letters |A|.
    std::size_t rank() const noexcept {
      return names_.size();
    }
    // Size of the closed alphabet |A ∪ A⁻¹|.
    std::size_t size() const noexcept {
      return 2 * names_.size();
    }

    bool contains(Letter a) const noexcept {
      return a.code() < size();
    }

    // All letters of A ∪ A⁻¹ in code order.
    std::vector<Letter> letters() const;

    std::vector<std::string> const& positive_names() const noexcept {
      return names_;
    }

    // Accepts "a" or "a'"; throws AlphabetError otherwise.
    Letter parse_letter(std::string_view token) const;
    bool try_parse_letter(std::string_view token, Letter& out) const;

    std::string name(Letter a) const;

    // True when every positive name is a single character, in which case
    // words may also be written without separators ("ab'a").
    bool single_char_names() const noexcept;

    bool operator==(Alphabet const& other) const {
      return names_ == other.names_;
    }

   private:
    std::vector<std::string>                     names_;
    std::unordered_map<std::string, std::size_t> index_;
  };

  // Alphabet {a, b, c, ...} of the given rank.
  Alphabet standard_alphabet(std::size_t rank);

  // Freely reduces w, deleting factors a a⁻¹ until none remain.
  Word free_reduce(Word const& w);
  bool is_reduced(Word const& w);
  // Formal inverse: reversed word with every letter inverted.
  Word inverse(Word const& w);
  Word concat(Word const& u, Word const& v);

  // Throws AlphabetError if some letter of w is outside the alphabet.
  void check_word(Alphabet const& alphabet, Word const& w);

  // Whitespace separated tokens, each a letter. When all letter names are
  // single characters a token may also be a run of letters ("ab'").
  // "", "1" and "-" (when not letter names) denote the empty word.
  Word parse_word(Alphabet const& alphabet, std::string_view text);

  // Letters joined by sep; the empty word formats as "".
  std::string format_word(Alphabet const& alphabet,
                          Word const&     w,
                          std::string_view sep = " ");

}  // namespace invgraph

#endif  // INVGRAPH_ALPHABET_HPP_
