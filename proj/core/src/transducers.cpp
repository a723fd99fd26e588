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

#include "invgraph/transducers.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "invgraph/error.hpp"
#include "invgraph/families.hpp"
#include "invgraph/text_format.hpp"

namespace invgraph {

  TransducerEdge const* InverseTransducer::edge(std::size_t p, Letter y) const {
    for (TransducerEdge const& e : edges) {
      if (e.from == p && e.input == y) {
        return &e;
      }
    }
    return nullptr;
  }

  std::vector<std::string> transducer_issues(InverseTransducer const& a) {
    std::vector<std::string> issues;
    auto                     describe = [&](TransducerEdge const& e) {
      return a.states.at(e.from) + " --" + a.input.name(e.input) + " | "
             + (e.output.empty() ? std::string("-") : format_word(a.output, e.output)) + "--> "
             + a.states.at(e.to);
    };
    if (a.states.empty()) {
      issues.push_back("transducer has no states");
      return issues;
    }
    if (a.root >= a.states.size()) {
      issues.push_back("root state out of range");
    }
    std::map<std::pair<std::size_t, std::size_t>, TransducerEdge const*> seen;
    for (TransducerEdge const& e : a.edges) {
      if (e.from >= a.states.size() || e.to >= a.states.size() || !a.input.contains(e.input)) {
        issues.push_back("edge with an unknown state or input letter");
        continue;
      }
      try {
        check_word(a.output, e.output);
      } catch (Error const&) {
        issues.push_back("output outside the output alphabet on " + describe(e));
        continue;
      }
      auto [it, fresh] = seen.emplace(std::make_pair(e.from, e.input.code()), &e);
      if (!fresh && (it->second->to != e.to || it->second->output != e.output)) {
        issues.push_back("nondeterministic: " + describe(*it->second) + " and " + describe(e));
      }
    }
    for (TransducerEdge const& e : a.edges) {
      if (e.from >= a.states.size() || e.to >= a.states.size() || !a.input.contains(e.input)) {
        continue;
      }
      auto it = seen.find({e.to, e.input.inverse().code()});
      if (it == seen.end() || it->second->to != e.from
          || it->second->output != inverse(e.output)) {
        issues.push_back("missing reverse of " + describe(e));
      }
    }
    return issues;
  }

  TransducerRun run_transducer(InverseTransducer const& a, Word const& s) {
    TransducerRun run;
    std::size_t   p = a.root;
    for (Letter y : s) {
      TransducerEdge const* e = a.edge(p, y);
      if (!e) {
        return run;
      }
      run.output.insert(run.output.end(), e->output.begin(), e->output.end());
      p = e->to;
    }
    run.end = p;
    return run;
  }

  std::optional<Word> transduce(InverseTransducer const& a, Word const& s) {
    TransducerRun run = run_transducer(a, s);
    if (!run.end || *run.end != a.root) {
      return std::nullopt;
    }
    return std::move(run.output);
  }

  RootedGraph product(InverseTransducer const& a, RootedGraph const& rg) {
    if (!(a.output == rg.graph.alphabet())) {
      throw Error("product: transducer output alphabet differs from the graph alphabet");
    }
    InverseGraph const&                          g = rg.graph;
    InverseGraph                                 out(a.input);
    std::map<std::pair<std::size_t, Vertex>, Vertex> index;
    std::vector<std::pair<std::size_t, Vertex>>  pairs;
    auto ensure = [&](std::size_t p, Vertex q) {
      auto [it, fresh] = index.emplace(std::make_pair(p, q), Vertex{0});
      if (fresh) {
        it->second = out.add_vertex(a.states[p] + ":" + g.key(q));
        pairs.emplace_back(p, q);
      }
      return it->second;
    };
    ensure(a.root, rg.root);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto const [p, q] = pairs[i];
      Vertex const from = static_cast<Vertex>(i);
      for (Letter y : a.input.letters()) {
        TransducerEdge const* e = a.edge(p, y);
        if (!e) {
          continue;
        }
        TraceResult r = trace_checked(g, q, e->output);
        if (r.end) {
          out.add_edge(from, y, ensure(e->to, *r.end));
        } else if (r.blocked_by_truncation) {
          out.set_truncated(from);
        }
      }
    }
    return RootedGraph(std::move(out), 0);
  }

  namespace {
    Word parse_output(Alphabet const& alphabet, std::vector<std::string> const& tokens) {
      if (tokens.size() == 1 && tokens[0] == "-") {
        return {};
      }
      std::string text;
      for (auto const& t : tokens) {
        text += t + " ";
      }
      return parse_word(alphabet, text);
    }

    std::size_t state_index(std::vector<std::string> const& states, std::string const& name) {
      auto it = std::find(states.begin(), states.end(), name);
      if (it == states.end()) {
        throw Error("unknown state '" + name + "'");
      }
      return static_cast<std::size_t>(it - states.begin());
    }
  }  // namespace

  InverseTransducer read_transducer(std::istream& in) {
    InverseTransducer a;
    bool              have_input = false, have_output = false;
    std::string       line;
    std::size_t       number = 0;
    while (std::getline(in, line)) {
      ++number;
      auto tokens = tokenize_line(line);
      if (tokens.empty()) {
        continue;
      }
      try {
        std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
        if (tokens[0] == "input") {
          a.input    = Alphabet(rest);
          have_input = true;
        } else if (tokens[0] == "output") {
          a.output    = Alphabet(rest);
          have_output = true;
        } else if (tokens[0] == "state") {
          for (auto const& s : rest) {
            if (std::find(a.states.begin(), a.states.end(), s) == a.states.end()) {
              a.states.push_back(s);
            }
          }
        } else if (tokens[0] == "edge") {
          if (!have_input || !have_output) {
            throw ParseError(number, "edge before the input and output lines");
          }
          if (tokens.size() < 6 || tokens[3] != "->") {
            throw ParseError(number, "expected 'edge STATE INPUT -> OUTPUT... STATE'");
          }
          TransducerEdge e;
          e.from   = state_index(a.states, tokens[1]);
          e.input  = a.input.parse_letter(tokens[2]);
          e.output = parse_output(
              a.output, std::vector<std::string>(tokens.begin() + 4, tokens.end() - 1));
          e.to = state_index(a.states, tokens.back());
          a.edges.push_back(std::move(e));
        } else {
          throw ParseError(number, "unknown directive '" + tokens[0] + "'");
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(number, e.what());
      }
    }
    if (!have_input || !have_output) {
      throw ParseError(0, "missing input or output line");
    }
    std::vector<TransducerEdge> reverse;
    for (TransducerEdge const& e : a.edges) {
      if (!a.edge(e.to, e.input.inverse())) {
        reverse.push_back({e.to, e.input.inverse(), inverse(e.output), e.from});
      }
    }
    for (TransducerEdge& e : reverse) {
      if (!a.edge(e.from, e.input)) {
        a.edges.push_back(std::move(e));
      }
    }
    if (auto issues = transducer_issues(a); !issues.empty()) {
      throw ParseError(0, issues.front());
    }
    return a;
  }

  InverseTransducer read_transducer_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_transducer(in);
  }

  InverseTransducer load_transducer(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    return read_transducer(in);
  }

  void check_assembly(GroupAssembly const& asm_) {
    std::size_t const n = asm_.transversal.size();
    if (n == 0 || asm_.transversal[0] != "1") {
      throw Error("the transversal must start with 1");
    }
    std::size_t const width = asm_.generators.size();
    std::vector<AssemblyRow const*> table(n * width, nullptr);
    for (AssemblyRow const& r : asm_.rows) {
      if (r.t >= n || r.next >= n || !asm_.generators.contains(r.y)) {
        throw Error("row with an unknown coset or letter");
      }
      check_word(asm_.subgroup, r.h);
      AssemblyRow const*& slot = table[r.t * width + r.y.code()];
      if (slot && (slot->h != r.h || slot->next != r.next)) {
        throw Error("two rows for " + asm_.transversal[r.t] + " " + asm_.generators.name(r.y));
      }
      slot = &r;
    }
    for (std::size_t t = 0; t < n; ++t) {
      for (Letter y : asm_.generators.letters()) {
        AssemblyRow const* r = table[t * width + y.code()];
        if (!r) {
          throw Error("no row for " + asm_.transversal[t] + " " + asm_.generators.name(y));
        }
        AssemblyRow const* back = table[r->next * width + y.inverse().code()];
        if (!back || back->next != t || back->h != inverse(r->h)) {
          throw Error("row " + asm_.transversal[t] + " " + asm_.generators.name(y)
                      + " has no matching reverse row");
        }
      }
    }
    for (Projection const& p : asm_.projections) {
      if (p.image.size() != asm_.subgroup.rank()) {
        throw Error("projection does not map every letter of the subgroup alphabet");
      }
      for (Word const& w : p.image) {
        check_word(p.target, w);
      }
    }
  }

  namespace {
    struct RawProjection {
      std::vector<std::string>              names;
      std::vector<std::vector<std::string>> images;  // per X letter, raw tokens
      std::vector<char>                     given;
    };

    std::string strip_prime(std::string const& token) {
      std::string s = token;
      while (!s.empty() && s.back() == '\'') {
        s.pop_back();
      }
      return s;
    }
  }  // namespace

  GroupAssembly read_assembly(std::istream& in) {
    GroupAssembly asm_;
    bool          have_generators = false;
    struct RawRow {
      std::size_t              line;
      std::vector<std::string> tokens;
    };
    std::vector<RawRow>                   rows;
    std::map<std::size_t, RawProjection>  projections;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> proj_lines;
    std::vector<std::string>              transversal;
    std::string                           line;
    std::size_t                           number = 0;
    while (std::getline(in, line)) {
      ++number;
      auto tokens = tokenize_line(line);
      if (tokens.empty()) {
        continue;
      }
      try {
        if (tokens[0] == "generators") {
          asm_.generators = Alphabet(std::vector<std::string>(tokens.begin() + 1, tokens.end()));
          have_generators = true;
        } else if (tokens[0] == "transversal") {
          transversal.assign(tokens.begin() + 1, tokens.end());
        } else if (tokens[0] == "row") {
          rows.push_back({number, tokens});
        } else if (tokens[0] == "proj") {
          proj_lines.emplace_back(number, tokens);
        } else if (tokens[0] == "radius") {
          if (tokens.size() != 2) {
            throw ParseError(number, "expected 'radius N'");
          }
          std::size_t r  = 0;
          auto [end, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), r);
          if (ec != std::errc() || end != tokens[1].data() + tokens[1].size()) {
            throw ParseError(number, "bad radius '" + tokens[1] + "'");
          }
          asm_.radius = r;
        } else {
          throw ParseError(number, "unknown directive '" + tokens[0] + "'");
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(number, e.what());
      }
    }
    if (!have_generators) {
      throw ParseError(0, "missing generators line");
    }
    if (std::find(transversal.begin(), transversal.end(), "1") == transversal.end()) {
      throw ParseError(0, "the transversal must contain 1");
    }
    asm_.transversal.push_back("1");
    for (auto const& t : transversal) {
      if (t == "1") {
        continue;
      }
      Letter dummy;
      if (!asm_.generators.try_parse_letter(t, dummy) || !dummy.is_positive()) {
        throw ParseError(0, "transversal element '" + t + "' is not a generator");
      }
      if (std::find(asm_.transversal.begin(), asm_.transversal.end(), t)
          != asm_.transversal.end()) {
        throw ParseError(0, "repeated transversal element '" + t + "'");
      }
      asm_.transversal.push_back(t);
    }
    std::vector<std::string> x_names;
    for (auto const& name : asm_.generators.positive_names()) {
      if (std::find(transversal.begin(), transversal.end(), name) == transversal.end()) {
        x_names.push_back(name);
      }
    }
    asm_.subgroup = Alphabet(x_names);

    std::size_t const n     = asm_.transversal.size();
    std::size_t const width = asm_.generators.size();
    std::vector<std::optional<AssemblyRow>> table(n * width);
    std::vector<std::size_t>                origin(n * width, 0);
    auto put = [&](AssemblyRow const& r, std::size_t where) {
      auto& slot = table[r.t * width + r.y.code()];
      if (slot && (slot->h != r.h || slot->next != r.next)) {
        throw ParseError(where, "row for " + asm_.transversal[r.t] + " "
                                    + asm_.generators.name(r.y)
                                    + " contradicts the row on line "
                                    + std::to_string(origin[r.t * width + r.y.code()]));
      }
      slot                               = r;
      origin[r.t * width + r.y.code()] = where;
    };
    std::vector<std::pair<AssemblyRow, std::size_t>> given;
    for (RawRow const& raw : rows) {
      auto const& tk = raw.tokens;
      try {
        if (tk.size() < 6 || tk[3] != "->") {
          throw ParseError(raw.line, "expected 'row T Y -> H... T''");
        }
        AssemblyRow r;
        r.t    = state_index(asm_.transversal, tk[1]);
        r.y    = asm_.generators.parse_letter(tk[2]);
        r.h    = parse_output(asm_.subgroup, std::vector<std::string>(tk.begin() + 4, tk.end() - 1));
        r.next = state_index(asm_.transversal, tk.back());
        put(r, raw.line);
        given.emplace_back(r, raw.line);
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(raw.line, e.what());
      }
    }
    for (auto const& [r, where] : given) {
      put(AssemblyRow{r.next, r.y.inverse(), inverse(r.h), r.t}, where);
    }
    for (std::size_t t = 0; t < n; ++t) {
      for (Letter y : asm_.generators.letters()) {
        auto const& slot = table[t * width + y.code()];
        if (!slot) {
          throw ParseError(0, "no row for " + asm_.transversal[t] + " "
                                  + asm_.generators.name(y));
        }
        asm_.rows.push_back(*slot);
      }
    }

    for (auto const& [where, tk] : proj_lines) {
      if (tk.size() < 5 || tk[3] != "->") {
        throw ParseError(where, "expected 'proj I X -> WORD'");
      }
      std::size_t i  = 0;
      auto [end, ec] = std::from_chars(tk[1].data(), tk[1].data() + tk[1].size(), i);
      if (ec != std::errc() || end != tk[1].data() + tk[1].size() || i == 0) {
        throw ParseError(where, "bad projection index '" + tk[1] + "'");
      }
      Letter x;
      if (!asm_.subgroup.try_parse_letter(tk[2], x) || !x.is_positive()) {
        throw ParseError(where, "'" + tk[2] + "' is not a subgroup generator");
      }
      RawProjection& p = projections[i];
      p.images.resize(asm_.subgroup.rank());
      p.given.resize(asm_.subgroup.rank(), 0);
      if (p.given[x.index()]++) {
        throw ParseError(where, "second image for " + tk[2]);
      }
      std::vector<std::string> word(tk.begin() + 4, tk.end());
      if (word.size() == 1 && word[0] == "-") {
        word.clear();
      }
      for (auto const& token : word) {
        std::string const name = strip_prime(token);
        if (name.empty()) {
          throw ParseError(where, "bad letter '" + token + "'");
        }
        if (std::find(p.names.begin(), p.names.end(), name) == p.names.end()) {
          p.names.push_back(name);
        }
      }
      p.images[x.index()] = std::move(word);
    }
    std::size_t expected = 1;
    for (auto& [i, raw] : projections) {
      if (i != expected++) {
        throw ParseError(0, "projections must be numbered 1, 2, ...");
      }
      if (std::count(raw.given.begin(), raw.given.end(), 1) != static_cast<long>(raw.given.size())) {
        throw ParseError(0, "projection " + std::to_string(i) + " does not map every generator");
      }
      Projection p;
      p.target = Alphabet(raw.names);
      for (auto const& word : raw.images) {
        p.image.push_back(free_reduce(parse_output(p.target, word.empty() ? std::vector<std::string>{"-"} : word)));
      }
      asm_.projections.push_back(std::move(p));
    }
    try {
      check_assembly(asm_);
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(0, e.what());
    }
    return asm_;
  }

  GroupAssembly read_assembly_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_assembly(in);
  }

  GroupAssembly load_assembly(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    return read_assembly(in);
  }

  void write_assembly(std::ostream& out, GroupAssembly const& asm_) {
    auto word = [](Alphabet const& a, Word const& w) {
      return w.empty() ? std::string("-") : format_word(a, w);
    };
    out << "generators";
    for (auto const& name : asm_.generators.positive_names()) {
      out << ' ' << name;
    }
    out << "\ntransversal";
    for (auto const& t : asm_.transversal) {
      out << ' ' << t;
    }
    out << '\n';
    for (AssemblyRow const& r : asm_.rows) {
      if (r.y.is_positive()) {
        out << "row " << asm_.transversal[r.t] << ' ' << asm_.generators.name(r.y) << " -> "
            << word(asm_.subgroup, r.h) << ' ' << asm_.transversal[r.next] << '\n';
      }
    }
    for (std::size_t i = 0; i < asm_.projections.size(); ++i) {
      Projection const& p = asm_.projections[i];
      for (std::size_t x = 0; x < p.image.size(); ++x) {
        out << "proj " << i + 1 << ' ' << asm_.subgroup.positive_names()[x] << " -> "
            << word(p.target, p.image[x]) << '\n';
      }
    }
    if (asm_.radius) {
      out << "radius " << *asm_.radius << '\n';
    }
  }

  InverseTransducer build_group_transducer(GroupAssembly const& asm_) {
    check_assembly(asm_);
    InverseTransducer a;
    a.input  = asm_.generators;
    a.output = asm_.subgroup;
    a.states = asm_.transversal;
    a.root   = 0;
    for (AssemblyRow const& r : asm_.rows) {
      a.edges.push_back({r.t, r.y, r.h, r.next});
    }
    if (auto issues = transducer_issues(a); !issues.empty()) {
      throw Error(issues.front());
    }
    return a;
  }

  Word apply_projection(Projection const& p, Word const& h) {
    Word out;
    for (Letter x : h) {
      Word const& image = p.image.at(x.index());
      if (x.is_positive()) {
        out.insert(out.end(), image.begin(), image.end());
      } else {
        Word inv = inverse(image);
        out.insert(out.end(), inv.begin(), inv.end());
      }
    }
    return free_reduce(out);
  }

  namespace {
    bool accepted_by_ball(RootedGraph const& ball, Word const& w) {
      TraceResult r = trace_checked(ball.graph, ball.root, w);
      if (r.blocked_by_truncation) {
        throw TrustError("projected word leaves the free group ball");
      }
      return r.end && *r.end == ball.root;
    }
  }  // namespace

  WordProblem::WordProblem(GroupAssembly asm_in, std::size_t radius)
      : asm_(std::move(asm_in)), transducer_(build_group_transducer(asm_)) {
    for (Projection const& p : asm_.projections) {
      balls_.push_back(free_group_ball(p.target, radius));
    }
  }

  bool WordProblem::member(Word const& w) const {
    check_word(asm_.generators, w);
    auto h = transduce(transducer_, w);
    if (!h) {
      return false;
    }
    for (std::size_t i = 0; i < balls_.size(); ++i) {
      if (!accepted_by_ball(balls_[i], apply_projection(asm_.projections[i], *h))) {
        return false;
      }
    }
    return true;
  }

  bool wp_member(GroupAssembly const& asm_, Word const& w) {
    check_word(asm_.generators, w);
    InverseTransducer const a = build_group_transducer(asm_);
    auto                    h = transduce(a, w);
    if (!h) {
      return false;
    }
    for (Projection const& p : asm_.projections) {
      Word const  image  = apply_projection(p, *h);
      std::size_t radius = asm_.radius.value_or(image.size());
      if (!accepted_by_ball(free_group_ball(p.target, radius), image)) {
        return false;
      }
    }
    return true;
  }

}  // namespace invgraph
