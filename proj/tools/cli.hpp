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

#ifndef INVGRAPH_TOOLS_CLI_HPP_
#define INVGRAPH_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace invgraph::cli {

  // Exit codes.
  inline constexpr int kTrue  = 0;
  inline constexpr int kFalse = 1;
  inline constexpr int kUsage = 2;

  // args excludes the program name.
  int dispatch(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace invgraph::cli

#endif  // INVGRAPH_TOOLS_CLI_HPP_
