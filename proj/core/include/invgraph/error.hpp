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

#ifndef INVGRAPH_ERROR_HPP_
#define INVGRAPH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invgraph {

  // Base class of everything the library throws.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A letter or word does not belong to the alphabet it is used with.
  class AlphabetError : public Error {
   public:
    using Error::Error;
  };

  // The answer could be falsified by vertices beyond a truncated boundary.
  class TrustError : public Error {
   public:
    using Error::Error;
  };

  // Malformed text input. line() is 1-based, 0 when no line applies.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

}  // namespace invgraph

#endif  // INVGRAPH_ERROR_HPP_
