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

#include "invgraph/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "invgraph/error.hpp"

namespace invgraph {

  namespace {
    bool valid_identifier(std::string const& name) {
      if (name.empty() || name == "1" || name == "-") {
        return false;
      }
      return std::none_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isspace(c) || c == '\'' || c == '#';
      });
    }
  }  // namespace

  Alphabet::Alphabet(std::vector<std::string> positive_names)
      : names_(std::move(positive_names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!valid_identifier(names_[i])) {
        throw AlphabetError("invalid letter name '" + names_[i] + "'");
      }
      if (!index_.emplace(names_[i], i).second) {
        throw AlphabetError("duplicate letter '" + names_[i] + "'");
      }
    }
  }

  std::vector<Letter> Alphabet::letters() const {
    std::vector<Letter> out;
    out.reserve(size());
    for (std::size_t c = 0; c < size(); ++c) {
      out.push_back(Letter::from_code(c));
    }
    return out;
  }

  bool Alphabet::try_parse_letter(std::string_view token, Letter& out) const {
    bool inverse = false;
    if (!token.empty() && token.back() == '\'') {
      inverse = true;
      token.remove_suffix(1);
    }
    auto it = index_.find(std::string(token));
    if (it == index_.end()) {
      return false;
    }
    out = inverse ? Letter::negative(it->second) : Letter::positive(it->second);
    return true;
  }

  Letter Alphabet::parse_letter(std::string_view token) const {
    Letter a;
    if (!try_parse_letter(token, a)) {
      throw AlphabetError("unknown letter '" + std::string(token) + "'");
    }
    return a;
  }

  std::string Alphabet::name(Letter a) const {
    if (!contains(a)) {
      throw AlphabetError("letter code " + std::to_string(a.code())
                          + " outside alphabet of rank "
                          + std::to_string(rank()));
    }
    return a.is_positive() ? names_[a.index()] : names_[a.index()] + "'";
  }

  bool Alphabet::single_char_names() const noexcept {
    return std::all_of(names_.begin(), names_.end(), [](std::string const& n) {
      return n.size() == 1;
    });
  }

  Alphabet standard_alphabet(std::size_t rank) {
    if (rank > 26) {
      throw AlphabetError("standard alphabets have at most 26 letters");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rank; ++i) {
      names.emplace_back(1, static_cast<char>('a' + i));
    }
    return Alphabet(std::move(names));
  }

  Word free_reduce(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (Letter a : w) {
      if (!out.empty() && out.back() == a.inverse()) {
        out.pop_back();
      } else {
        out.push_back(a);
      }
    }
    return out;
  }

  bool is_reduced(Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1].inverse()) {
        return false;
      }
    }
    return true;
  }

  Word inverse(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& a : out) {
      a = a.inverse();
    }
    return out;
  }

  Word concat(Word const& u, Word const& v) {
    Word out(u);
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  void check_word(Alphabet const& alphabet, Word const& w) {
    for (Letter a : w) {
      if (!alphabet.contains(a)) {
        throw AlphabetError("letter code " + std::to_string(a.code())
                            + " outside alphabet of rank "
                            + std::to_string(alphabet.rank()));
      }
    }
  }

  Word parse_word(Alphabet const& alphabet, std::string_view text) {
    Word               out;
    std::istringstream in{std::string(text)};
    std::string        token;
    bool const         compact = alphabet.single_char_names();
    while (in >> token) {
      Letter a;
      if (alphabet.try_parse_letter(token, a)) {
        out.push_back(a);
        continue;
      }
      if (token == "1" || token == "-") {
        continue;
      }
      if (!compact) {
        throw AlphabetError("unknown letter '" + token + "'");
      }
      for (std::size_t i = 0; i < token.size();) {
        std::size_t len = (i + 1 < token.size() && token[i + 1] == '\'') ? 2 : 1;
        out.push_back(alphabet.parse_letter(std::string_view(token).substr(i, len)));
        i += len;
      }
    }
    return out;
  }

  std::string format_word(Alphabet const&  alphabet,
                          Word const&      w,
                          std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += sep;
      }
      out += alphabet.name(w[i]);
    }
    return out;
  }

}  // namespace invgraph
