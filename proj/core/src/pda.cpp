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

#include "invgraph/pda.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "invgraph/error.hpp"
#include "invgraph/text_format.hpp"

namespace invgraph {

  namespace {
    std::optional<std::size_t> index_of(std::vector<std::string> const& names,
                                        std::string_view                name) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - names.begin());
    }

    std::size_t ensure(std::vector<std::string>& names, std::string const& name) {
      if (auto i = index_of(names, name)) {
        return *i;
      }
      names.push_back(name);
      return names.size() - 1;
    }
  }  // namespace

  std::size_t Pda::ensure_state(std::string const& name) {
    return ensure(states, name);
  }
  std::size_t Pda::ensure_symbol(std::string const& name) {
    return ensure(stack_symbols, name);
  }
  std::optional<std::size_t> Pda::find_state(std::string_view name) const {
    return index_of(states, name);
  }
  std::optional<std::size_t> Pda::find_symbol(std::string_view name) const {
    return index_of(stack_symbols, name);
  }
  bool Pda::is_final(std::size_t state) const {
    return std::find(finals.begin(), finals.end(), state) != finals.end();
  }

  std::string format_configuration(Pda const& m, Configuration const& c) {
    std::string out = m.states[c.state] + "[";
    for (std::size_t i = 0; i < c.stack.size(); ++i) {
      out += (i ? "," : "") + m.stack_symbols[c.stack[i]];
    }
    return out + "]";
  }

  namespace {
    // Greedy longest-match split of a run of stack symbol names.
    std::vector<std::size_t> split_symbols(Pda const& m, std::string_view token) {
      std::vector<std::size_t> out;
      std::size_t              pos = 0;
      while (pos < token.size()) {
        std::size_t best = 0, best_len = 0;
        for (std::size_t s = 0; s < m.stack_symbols.size(); ++s) {
          std::string const& name = m.stack_symbols[s];
          if (name.size() > best_len && token.substr(pos, name.size()) == name) {
            best     = s;
            best_len = name.size();
          }
        }
        if (best_len == 0) {
          throw Error("cannot split '" + std::string(token) + "' into stack symbols");
        }
        out.push_back(best);
        pos += best_len;
      }
      return out;
    }
  }  // namespace

  Pda read_pda(std::istream& in) {
    Pda                        m;
    bool                       have_alphabet = false;
    std::optional<std::string> bottom;
    std::optional<std::string> initial;
    std::string                line;
    std::size_t                number = 0;
    auto symbol = [&](std::string const& name) {
      auto s = m.find_symbol(name);
      if (!s) {
        throw ParseError(number, "undeclared stack symbol '" + name + "'");
      }
      return *s;
    };
    while (std::getline(in, line)) {
      ++number;
      auto tokens = tokenize_line(line);
      if (tokens.empty()) {
        continue;
      }
      std::string const& head = tokens[0];
      try {
        if (head == "alphabet") {
          if (have_alphabet) {
            throw ParseError(number, "second alphabet line");
          }
          m.input       = Alphabet(std::vector<std::string>(tokens.begin() + 1, tokens.end()));
          have_alphabet = true;
        } else if (head == "stack") {
          for (std::size_t i = 1; i < tokens.size(); ++i) {
            m.ensure_symbol(tokens[i]);
          }
        } else if (head == "bottom") {
          if (tokens.size() != 2) {
            throw ParseError(number, "expected 'bottom SYMBOL'");
          }
          m.ensure_symbol(tokens[1]);
          bottom = tokens[1];
        } else if (head == "state") {
          if (tokens.size() < 2) {
            throw ParseError(number, "expected 'state NAME [initial] [final]'");
          }
          std::size_t q = m.ensure_state(tokens[1]);
          for (std::size_t i = 2; i < tokens.size(); ++i) {
            if (tokens[i] == "initial") {
              if (initial && *initial != tokens[1]) {
                throw ParseError(number, "second initial state");
              }
              initial = tokens[1];
            } else if (tokens[i] == "final") {
              if (!m.is_final(q)) {
                m.finals.push_back(q);
              }
            } else {
              throw ParseError(number, "unknown state flag '" + tokens[i] + "'");
            }
          }
        } else if (head == "final") {
          for (std::size_t i = 1; i < tokens.size(); ++i) {
            std::size_t q = m.ensure_state(tokens[i]);
            if (!m.is_final(q)) {
              m.finals.push_back(q);
            }
          }
        } else if (head == "accept") {
          if (tokens.size() != 2 || (tokens[1] != "final" && tokens[1] != "bottom")) {
            throw ParseError(number, "expected 'accept final' or 'accept bottom'");
          }
          m.accept = tokens[1] == "final" ? AcceptMode::kFinalState
                                          : AcceptMode::kFinalStateAndBottom;
        } else if (head == "trans") {
          if (!have_alphabet) {
            throw ParseError(number, "transition before the alphabet line");
          }
          if (tokens.size() < 7 || tokens[4] != "->") {
            throw ParseError(number, "expected 'trans STATE INPUT TOP -> STATE PUSH'");
          }
          PdaTransition t;
          t.from = m.ensure_state(tokens[1]);
          if (tokens[2] != "1") {
            t.input = m.input.parse_letter(tokens[2]);
          }
          t.top = symbol(tokens[3]);
          t.to  = m.ensure_state(tokens[5]);
          if (!(tokens.size() == 7 && tokens[6] == "-")) {
            for (std::size_t i = 6; i < tokens.size(); ++i) {
              if (auto s = m.find_symbol(tokens[i])) {
                t.push.push_back(*s);
              } else {
                auto parts = split_symbols(m, tokens[i]);
                t.push.insert(t.push.end(), parts.begin(), parts.end());
              }
            }
          }
          m.transitions.push_back(std::move(t));
        } else {
          throw ParseError(number, "unknown directive '" + head + "'");
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(number, e.what());
      }
    }
    if (!have_alphabet) {
      throw ParseError(0, "missing alphabet line");
    }
    if (!bottom) {
      throw ParseError(0, "missing bottom line");
    }
    m.bottom = *m.find_symbol(*bottom);
    if (!initial) {
      if (m.states.empty()) {
        throw ParseError(0, "machine has no states");
      }
      initial = m.states.front();
    }
    m.initial = *m.find_state(*initial);
    return m;
  }

  Pda read_pda_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_pda(in);
  }

  Pda load_pda(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    return read_pda(in);
  }

  void write_pda(std::ostream& out, Pda const& m) {
    out << "alphabet";
    for (auto const& name : m.input.positive_names()) {
      out << ' ' << name;
    }
    out << "\nstack";
    for (auto const& name : m.stack_symbols) {
      out << ' ' << name;
    }
    out << "\nbottom " << m.stack_symbols[m.bottom] << '\n';
    for (std::size_t q = 0; q < m.states.size(); ++q) {
      out << "state " << m.states[q];
      if (q == m.initial) {
        out << " initial";
      }
      if (m.is_final(q)) {
        out << " final";
      }
      out << '\n';
    }
    out << "accept " << (m.accept == AcceptMode::kFinalState ? "final" : "bottom") << '\n';
    for (PdaTransition const& t : m.transitions) {
      out << "trans " << m.states[t.from] << ' ' << (t.input ? m.input.name(*t.input) : "1")
          << ' ' << m.stack_symbols[t.top] << " -> " << m.states[t.to];
      if (t.push.empty()) {
        out << " -";
      }
      for (std::size_t s : t.push) {
        out << ' ' << m.stack_symbols[s];
      }
      out << '\n';
    }
  }

  namespace {
    // (state, input code or kOneMove, top) -> transitions.
    constexpr std::size_t kOneMove = static_cast<std::size_t>(-1);

    using TransitionIndex =
        std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::size_t>>;

    TransitionIndex index_transitions(Pda const& m) {
      TransitionIndex index;
      for (std::size_t i = 0; i < m.transitions.size(); ++i) {
        PdaTransition const& t = m.transitions[i];
        index[{t.from, t.input ? t.input->code() : kOneMove, t.top}].push_back(i);
      }
      return index;
    }

    PdaTransition const* lookup(Pda const&             m,
                                TransitionIndex const& index,
                                std::size_t            state,
                                std::size_t            input,
                                std::size_t            top) {
      auto it = index.find({state, input, top});
      return it == index.end() ? nullptr : &m.transitions[it->second.front()];
    }

    void apply(PdaTransition const& t, Configuration& c) {
      c.state = t.to;
      c.stack.pop_back();
      c.stack.insert(c.stack.end(), t.push.begin(), t.push.end());
    }

    bool accepting(Pda const& m, Configuration const& c) {
      if (!m.is_final(c.state)) {
        return false;
      }
      return m.accept == AcceptMode::kFinalState
             || (c.stack.size() == 1 && c.stack[0] == m.bottom);
    }
  }  // namespace

  bool is_deterministic(Pda const& m) {
    auto index = index_transitions(m);
    for (auto const& [key, list] : index) {
      if (list.size() > 1) {
        return false;
      }
      auto [state, input, top] = key;
      if (input == kOneMove) {
        for (std::size_t c = 0; c < m.input.size(); ++c) {
          if (index.count({state, c, top})) {
            return false;
          }
        }
      }
    }
    return true;
  }

  RunResult run_pda(Pda const& m, Word const& w) {
    check_word(m.input, w);
    if (!is_deterministic(m)) {
      throw Error("run_pda needs a deterministic machine");
    }
    auto const            index = index_transitions(m);
    constexpr std::size_t kMaxOneMoves = 1u << 16;
    std::size_t           one_moves    = 0;
    auto                  one_move     = [&](Configuration& c) {
      if (c.stack.empty()) {
        return false;
      }
      PdaTransition const* t = lookup(m, index, c.state, kOneMove, c.stack.back());
      if (!t) {
        return false;
      }
      if (++one_moves > kMaxOneMoves) {
        throw Error("run_pda: 1-moves do not terminate");
      }
      apply(*t, c);
      return true;
    };

    RunResult     result;
    Configuration c{m.initial, {m.bottom}};
    for (Letter a : w) {
      while (one_move(c)) {
      }
      if (c.stack.empty()) {
        return result;
      }
      PdaTransition const* t = lookup(m, index, c.state, a.code(), c.stack.back());
      if (!t) {
        return result;
      }
      apply(*t, c);
    }
    while (!accepting(m, c) && one_move(c)) {
    }
    result.accepted = accepting(m, c);
    result.end      = std::move(c);
    return result;
  }

  namespace {
    struct Exploration {
      std::vector<Configuration>                            configs;
      std::vector<std::tuple<std::size_t, Letter, std::size_t>> arcs;
      std::vector<char>                                     cut;
    };

    Exploration explore(Pda const& m, std::size_t height) {
      for (PdaTransition const& t : m.transitions) {
        if (!t.input) {
          throw Error("configuration graphs need a machine without 1-moves");
        }
      }
      Exploration                          ex;
      std::map<Configuration, std::size_t> seen;
      ex.configs.push_back({m.initial, {m.bottom}});
      ex.cut.push_back(0);
      seen.emplace(ex.configs[0], 0);
      for (std::size_t i = 0; i < ex.configs.size(); ++i) {
        if (ex.configs[i].stack.empty()) {
          continue;
        }
        Configuration const here = ex.configs[i];
        for (PdaTransition const& t : m.transitions) {
          if (t.from != here.state || t.top != here.stack.back()) {
            continue;
          }
          Configuration next = here;
          apply(t, next);
          if (next.stack.size() > height + 1) {
            ex.cut[i] = 1;
            continue;
          }
          auto [it, fresh] = seen.emplace(next, ex.configs.size());
          if (fresh) {
            ex.configs.push_back(next);
            ex.cut.push_back(0);
          }
          ex.arcs.emplace_back(i, *t.input, it->second);
        }
      }
      return ex;
    }
  }  // namespace

  RootedGraph config_graph(Pda const& m, std::size_t height) {
    Exploration  ex = explore(m, height);
    InverseGraph g(m.input);
    for (Configuration const& c : ex.configs) {
      g.add_vertex(format_configuration(m, c));
    }
    for (auto const& [u, a, v] : ex.arcs) {
      g.add_arc(static_cast<Vertex>(u), a, static_cast<Vertex>(v));
    }
    for (std::size_t i = 0; i < ex.cut.size(); ++i) {
      if (ex.cut[i]) {
        g.set_truncated(static_cast<Vertex>(i));
      }
    }
    return RootedGraph(std::move(g), 0);
  }

  bool PdaReport::has(PdaViolation kind) const {
    return std::any_of(issues.begin(), issues.end(),
                       [kind](PdaIssue const& i) { return i.kind == kind; });
  }

  std::string PdaReport::to_string() const {
    std::string out;
    for (PdaIssue const& i : issues) {
      out += i.detail + "\n";
    }
    return out;
  }

  PdaReport validate_inverse_pda(Pda const& m, std::size_t height) {
    PdaReport report;
    auto      describe = [&](PdaTransition const& t) {
      return "(" + m.states[t.from] + ", " + (t.input ? m.input.name(*t.input) : "1") + ", "
             + m.stack_symbols[t.top] + ")";
    };
    auto const index = index_transitions(m);
    for (auto const& [key, list] : index) {
      if (list.size() > 1) {
        report.issues.push_back({PdaViolation::kNondeterministic,
                                 "nondeterministic: " + std::to_string(list.size())
                                     + " transitions on "
                                     + describe(m.transitions[list.front()])});
      }
    }
    bool one_moves = false;
    for (PdaTransition const& t : m.transitions) {
      if (!t.input) {
        one_moves = true;
        report.issues.push_back({PdaViolation::kOneMove, "1-move on " + describe(t)});
      }
      if (t.push.size() > 2) {
        report.issues.push_back({PdaViolation::kHeightChange,
                                 "stack height changes by " + std::to_string(t.push.size() - 1)
                                     + " on " + describe(t)});
      }
    }
    if (one_moves) {
      return report;
    }

    Exploration const ex = explore(m, height);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> out_arcs;
    for (auto const& [u, a, v] : ex.arcs) {
      out_arcs[{u, a.code()}].push_back(v);
    }
    for (std::size_t i = 0; i < ex.configs.size(); ++i) {
      if (ex.configs[i].stack.empty()) {
        report.issues.push_back({PdaViolation::kEmptyStack,
                                 "reachable empty stack at "
                                     + format_configuration(m, ex.configs[i])});
      }
    }
    for (auto const& [u, a, v] : ex.arcs) {
      auto it = out_arcs.find({v, a.inverse().code()});
      if (it == out_arcs.end()
          || std::find(it->second.begin(), it->second.end(), u) == it->second.end()) {
        report.issues.push_back(
            {PdaViolation::kMissingReverse,
             "no reverse of " + format_configuration(m, ex.configs[u]) + " --"
                 + m.input.name(a) + "--> " + format_configuration(m, ex.configs[v])});
      }
    }
    return report;
  }

  Pda dyck_checker_pda(InverseGraph const& lambda, Vertex y) {
    lambda.check_vertex(y);
    Alphabet const& alphabet = lambda.alphabet();
    Pda             m;
    m.input = alphabet;
    for (Vertex v = 0; v < lambda.num_vertices(); ++v) {
      m.states.push_back(lambda.key(v));
    }
    m.stack_symbols.push_back("bot");
    for (Letter a : alphabet.letters()) {
      m.stack_symbols.push_back(alphabet.name(a));
    }
    auto symbol_of = [](Letter a) { return a.code() + 1; };
    m.bottom       = 0;
    m.initial      = y;
    m.finals       = {y};
    m.accept       = AcceptMode::kFinalStateAndBottom;
    for (Vertex x1 = 0; x1 < lambda.num_vertices(); ++x1) {
      for (Letter b : alphabet.letters()) {
        Vertex x2 = lambda.target(x1, b);
        if (x2 == kNoVertex) {
          continue;
        }
        for (std::size_t top = 0; top < m.stack_symbols.size(); ++top) {
          bool cancels = top != m.bottom && symbol_of(b.inverse()) == top;
          if (cancels) {
            m.transitions.push_back({x1, b, top, x2, {}});
          } else {
            m.transitions.push_back({x1, b, top, x2, {top, symbol_of(b)}});
          }
        }
      }
    }
    return m;
  }

  Pda positive_part(Pda const& m) {
    Pda out = m;
    out.transitions.clear();
    for (PdaTransition const& t : m.transitions) {
      if (t.input && t.input->is_positive()) {
        out.transitions.push_back(t);
      }
    }
    return out;
  }

  Pda reversible_extension(Pda const& n) {
    Pda  out = n;
    auto add = [&](PdaTransition t) {
      if (std::find(out.transitions.begin(), out.transitions.end(), t) == out.transitions.end()) {
        out.transitions.push_back(std::move(t));
      }
    };
    for (PdaTransition const& t : n.transitions) {
      if (!t.input || !t.input->is_positive()) {
        throw Error("reversible_extension expects positive transitions only");
      }
      Letter back = t.input->inverse();
      if (t.push.size() == 2 && t.push[0] == t.top) {
        add({t.to, back, t.push[1], t.from, {}});
      } else if (t.push.size() == 1) {
        add({t.to, back, t.push[0], t.from, {t.top}});
      } else if (t.push.empty()) {
        for (std::size_t z = 0; z < n.stack_symbols.size(); ++z) {
          add({t.to, back, z, t.from, {z, t.top}});
        }
      } else {
        throw Error("transition on (" + n.states[t.from] + ", " + n.input.name(*t.input)
                    + ") is not a push, replace or pop");
      }
    }
    return out;
  }

}  // namespace invgraph
