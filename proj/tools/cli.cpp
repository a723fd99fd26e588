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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <variant>

#include "invgraph/analysis.hpp"
#include "invgraph/cones.hpp"
#include "invgraph/decomposition.hpp"
#include "invgraph/error.hpp"
#include "invgraph/families.hpp"
#include "invgraph/metric.hpp"
#include "invgraph/morphisms.hpp"
#include "invgraph/pda.hpp"
#include "invgraph/quotients.hpp"
#include "invgraph/text_format.hpp"
#include "invgraph/transducers.hpp"

namespace invgraph::cli {

  namespace {
    // Missing or unreadable input; exit 2 rather than 1.
    class FileError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    // Annotates parse errors with the file they came from.
    class FileParseError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    template <class F>
    auto load(std::string const& path, F&& reader) {
      std::ifstream in(path);
      if (!in) {
        throw FileError("cannot open '" + path + "'");
      }
      try {
        return reader(in);
      } catch (ParseError const& e) {
        throw FileParseError(path + ": " + e.what());
      }
    }

    RootedGraph graph_file(std::string const& path) {
      return load(path, [](std::istream& in) { return read_graph(in); });
    }

    Vertex vertex_arg(InverseGraph const& g, std::string const& key) {
      auto v = g.find_vertex(key);
      if (!v) {
        throw Error("no vertex '" + key + "'");
      }
      return *v;
    }

    std::string word_text(Alphabet const& a, Word const& w) {
      return w.empty() ? std::string("1") : format_word(a, w);
    }

    struct Context {
      std::ostream& out;
      std::ostream& err;
      std::string   dot;

      void emit_dot(RootedGraph const& rg, std::string_view name) const {
        if (dot.empty()) {
          return;
        }
        std::ofstream file(dot);
        if (!file) {
          throw FileError("cannot write '" + dot + "'");
        }
        write_dot(file, rg, name);
      }

      int verdict(bool value) const {
        out << (value ? "true" : "false") << '\n';
        return value ? kTrue : kFalse;
      }
    };

    int cmd_validate(Context const& cx, std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw FileError("cannot open '" + path + "'");
      }
      RootedGraph rg;
      try {
        rg = read_graph(in);
      } catch (ParseError const& e) {
        cx.out << "invalid: " << path << ": " << e.what() << '\n';
        return kFalse;
      }
      std::size_t const r = trusted_radius(rg);
      cx.out << "valid: " << rg.graph.num_vertices() << " vertices, "
             << rg.graph.positive_edges().size() << " edges, trusted radius "
             << (r == kUnbounded ? std::string("unbounded") : std::to_string(r)) << '\n';
      cx.emit_dot(rg, "graph");
      return kTrue;
    }

    int cmd_member(Context const& cx, std::string const& path, std::string const& text) {
      RootedGraph const rg = graph_file(path);
      Word const        w  = parse_word(rg.graph.alphabet(), text);
      TraceResult const r  = trace_checked(rg.graph, rg.root, w);
      if (r.blocked_by_truncation) {
        throw TrustError("the walk leaves the trusted region");
      }
      return cx.verdict(r.end && *r.end == rg.root);
    }

    int cmd_make(Context const& cx, std::vector<std::string> const& args) {
      FamilyOutput made = make(parse_family(args));
      if (auto* rg = std::get_if<RootedGraph>(&made)) {
        write_graph(cx.out, *rg);
        cx.emit_dot(*rg, args[0]);
      } else {
        write_assembly(cx.out, std::get<GroupAssembly>(made));
      }
      return kTrue;
    }

    int cmd_morphism(Context const& cx, std::string const& src, std::string const& tgt) {
      RootedGraph const a = graph_file(src);
      RootedGraph const b = graph_file(tgt);
      auto              m = find_morphism(a, b);
      if (!m) {
        cx.out << "no morphism\n";
        return kFalse;
      }
      for (Vertex v = 0; v < a.graph.num_vertices(); ++v) {
        cx.out << a.graph.key(v) << " -> " << b.graph.key((*m)(v)) << '\n';
      }
      return kTrue;
    }

    int cmd_cover(Context const& cx, std::string const& src, std::string const& tgt) {
      RootedGraph const a = graph_file(src);
      RootedGraph const b = graph_file(tgt);
      auto              m = find_morphism(a, b);
      if (!m) {
        cx.out << "no morphism\n";
        return kFalse;
      }
      CoverReport const report = is_cover(a.graph, b.graph, *m);
      cx.out << "cover " << (report.is_cover ? "true" : "false") << '\n'
             << "surjective " << (report.surjective ? "true" : "false") << '\n'
             << "skipped " << report.skipped.size() << '\n';
      if (report.witness) {
        cx.out << "witness " << a.graph.key(*report.witness) << '\n';
      }
      return report.is_cover ? kTrue : kFalse;
    }

    int cmd_quotient(Context const& cx, std::string const& path, std::string const& seeds) {
      RootedGraph const   rg = graph_file(path);
      std::vector<Vertex> w;
      std::istringstream  in(seeds);
      std::string         key;
      while (std::getline(in, key, ',')) {
        if (!key.empty()) {
          w.push_back(vertex_arg(rg.graph, key));
        }
      }
      DvQuotient const q = dv_quotient(rg, w);
      cx.out << "# saturated " << (q.saturated ? "true" : "false") << '\n';
      write_graph(cx.out, q.quotient);
      cx.emit_dot(q.quotient, "quotient");
      return kTrue;
    }

    int cmd_census(Context const&     cx,
                   std::string const& path,
                   std::size_t        max_norm,
                   std::size_t        depth,
                   bool               labeled,
                   std::size_t        jobs,
                   bool               rows) {
      RootedGraph const rg     = graph_file(path);
      Census const      census = end_cone_census(
          rg, max_norm, depth,
          labeled ? ConeEquivalence::kLabeled : ConeEquivalence::kUpToRelabeling, jobs);
      if (rows) {
        write_census_tsv(cx.out, census);
      } else {
        write_census_summary(cx.out, census);
      }
      return kTrue;
    }

    int cmd_treedec(Context const& cx, std::string const& path, std::string const& decfile) {
      RootedGraph const       rg  = graph_file(path);
      DecompositionFile const dec = load(decfile, [&](std::istream& in) {
        return read_decomposition(in, rg.graph);
      });
      auto diameter = [](std::size_t d) {
        return d == kUnreachable ? std::string("unbounded") : std::to_string(d);
      };
      auto print = [&](TreeDecompositionReport const& r) {
        cx.out << "tree " << r.tree << "\nT1 " << r.t1 << "\nT2 " << r.t2 << "\nT3 " << r.t3
               << "\nmax bag diameter " << diameter(r.max_bag_diameter) << '\n';
        if (r.witness) {
          cx.out << "witness " << rg.graph.key(*r.witness) << '\n';
        }
        if (r.edge_witness) {
          cx.out << "edge witness " << rg.graph.key(r.edge_witness->source) << ' '
                 << rg.graph.alphabet().name(r.edge_witness->label) << ' '
                 << rg.graph.key(r.edge_witness->target) << '\n';
        }
      };
      if (dec.tree) {
        TreeDecompositionReport const r = verify_tree_decomposition(rg.graph, *dec.tree);
        print(r);
        return r.valid() ? kTrue : kFalse;
      }
      StrongTreeReport const r = verify_strong_tree_decomposition(rg.graph, *dec.partition);
      cx.out << "quotient tree " << r.quotient_is_tree << "\nmax block diameter "
             << diameter(r.max_block_diameter) << "\naugmented bound "
             << r.augmented_within_bound << '\n';
      if (r.quotient_is_tree) {
        print(r.augmented_report);
      }
      return r.valid() ? kTrue : kFalse;
    }

    int cmd_conesep(Context const& cx, std::string const& path, std::string const& v,
                    std::size_t delta) {
      RootedGraph const rg = graph_file(path);
      return cx.verdict(cone_separation_check(rg, vertex_arg(rg.graph, v), delta));
    }

    Pda pda_file(std::string const& path) {
      return load(path, [](std::istream& in) { return read_pda(in); });
    }

    int cmd_pda_run(Context const& cx, std::string const& path, std::string const& text) {
      Pda const       m = pda_file(path);
      RunResult const r = run_pda(m, parse_word(m.input, text));
      cx.out << (r.accepted ? "accepted" : "rejected");
      if (r.end) {
        cx.out << ' ' << format_configuration(m, *r.end);
      } else {
        cx.out << " (blocked)";
      }
      cx.out << '\n';
      return r.accepted ? kTrue : kFalse;
    }

    int cmd_config_graph(Context const& cx, std::string const& path, std::size_t height) {
      RootedGraph const rg = config_graph(pda_file(path), height);
      write_graph(cx.out, rg);
      cx.emit_dot(rg, "configurations");
      return kTrue;
    }

    int cmd_dyck_pda(Context const& cx, std::string const& path, std::string const& v) {
      RootedGraph const rg = graph_file(path);
      write_pda(cx.out, dyck_checker_pda(rg.graph, vertex_arg(rg.graph, v)));
      return kTrue;
    }

    int cmd_product(Context const& cx, std::string const& tfile, std::string const& gfile) {
      InverseTransducer const a  = load(tfile, [](std::istream& in) { return read_transducer(in); });
      RootedGraph const       rg = product(a, graph_file(gfile));
      write_graph(cx.out, rg);
      cx.emit_dot(rg, "product");
      return kTrue;
    }

    int cmd_wp(Context const& cx, std::string const& path, std::string const& text) {
      GroupAssembly const asm_ = load(path, [](std::istream& in) { return read_assembly(in); });
      return cx.verdict(wp_member(asm_, parse_word(asm_.generators, text)));
    }

    int cmd_geodesics(Context const& cx, std::string const& path, std::size_t max_len) {
      RootedGraph const rg = graph_file(path);
      for (Word const& w : geodesic_words(rg, max_len)) {
        cx.out << word_text(rg.graph.alphabet(), w) << '\n';
      }
      return kTrue;
    }
  }  // namespace

  int dispatch(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Inverse graphs, end-cones, pushdown machines and transducers", "invgraph"};
    app.require_subcommand(1);
    Context cx{out, err, {}};
    app.add_option("--dot", cx.dot, "Write the produced graph as DOT to this file");

    std::function<int()> run;
    std::string          file, file2, word, seeds, vertex;
    std::vector<std::string> family;
    std::size_t          max_norm = 0, depth = 0, jobs = 1, delta = 0, height = 0, max_len = 0;
    bool                 labeled = false, rows = false;

    auto* s = app.add_subcommand("validate", "Check a graph file");
    s->add_option("FILE", file)->required();
    s->callback([&] { run = [&] { return cmd_validate(cx, file); }; });

    s = app.add_subcommand("member", "Is WORD a circuit at the root");
    s->add_option("FILE", file)->required();
    s->add_option("WORD", word)->required();
    s->callback([&] { run = [&] { return cmd_member(cx, file, word); }; });

    s = app.add_subcommand("make", "Build a family graph or assembly");
    s->add_option("FAMILY", family)->required()->expected(1, -1);
    s->callback([&] { run = [&] { return cmd_make(cx, family); }; });

    s = app.add_subcommand("morphism", "Root-preserving morphism SRC -> TGT");
    s->add_option("SRC", file)->required();
    s->add_option("TGT", file2)->required();
    s->callback([&] { run = [&] { return cmd_morphism(cx, file, file2); }; });

    s = app.add_subcommand("cover", "Is the root morphism SRC -> TGT a cover");
    s->add_option("SRC", file)->required();
    s->add_option("TGT", file2)->required();
    s->callback([&] { run = [&] { return cmd_cover(cx, file, file2); }; });

    s = app.add_subcommand("quotient", "Determinizing quotient by a seed set");
    s->add_option("FILE", file)->required();
    s->add_option("--seeds", seeds, "Comma separated vertex keys")->required();
    s->callback([&] { run = [&] { return cmd_quotient(cx, file, seeds); }; });

    s = app.add_subcommand("census", "End-cone census");
    s->add_option("FILE", file)->required();
    s->add_option("--max-norm", max_norm)->required();
    s->add_option("--depth", depth)->required();
    s->add_flag("--labeled", labeled, "Compare cones with labels fixed");
    s->add_flag("--rows", rows, "Print one row per vertex");
    s->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    s->callback([&] {
      run = [&] { return cmd_census(cx, file, max_norm, depth, labeled, jobs, rows); };
    });

    s = app.add_subcommand("treedec", "Verify a tree decomposition or strong partition");
    s->add_option("FILE", file)->required();
    s->add_option("DECFILE", file2)->required();
    s->callback([&] { run = [&] { return cmd_treedec(cx, file, file2); }; });

    s = app.add_subcommand("conesep", "Cone separation by a disk");
    s->add_option("FILE", file)->required();
    s->add_option("--vertex", vertex)->required();
    s->add_option("--delta", delta)->required();
    s->callback([&] { run = [&] { return cmd_conesep(cx, file, vertex, delta); }; });

    s = app.add_subcommand("pda-run", "Run a deterministic pushdown machine");
    s->add_option("PDAFILE", file)->required();
    s->add_option("WORD", word)->required();
    s->callback([&] { run = [&] { return cmd_pda_run(cx, file, word); }; });

    s = app.add_subcommand("config-graph", "Configuration graph up to a stack height");
    s->add_option("PDAFILE", file)->required();
    s->add_option("--height", height)->required();
    s->callback([&] { run = [&] { return cmd_config_graph(cx, file, height); }; });

    s = app.add_subcommand("dyck-pda", "Dyck checker machine at a vertex");
    s->add_option("FILE", file)->required();
    s->add_option("--vertex", vertex)->required();
    s->callback([&] { run = [&] { return cmd_dyck_pda(cx, file, vertex); }; });

    s = app.add_subcommand("product", "Transducer product with a graph");
    s->add_option("TRANSFILE", file)->required();
    s->add_option("GRAPHFILE", file2)->required();
    s->callback([&] { run = [&] { return cmd_product(cx, file, file2); }; });

    s = app.add_subcommand("wp", "Word problem of an assembled group");
    s->add_option("ASSEMBLYFILE", file)->required();
    s->add_option("WORD", word)->required();
    s->callback([&] { run = [&] { return cmd_wp(cx, file, word); }; });

    s = app.add_subcommand("geodesics", "Geodesic words from the root");
    s->add_option("FILE", file)->required();
    s->add_option("--max-len", max_len)->required();
    s->callback([&] { run = [&] { return cmd_geodesics(cx, file, max_len); }; });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? kTrue : kUsage;
    }
    try {
      return run();
    } catch (FileError const& e) {
      err << "invgraph: " << e.what() << '\n';
      return kUsage;
    } catch (FileParseError const& e) {
      err << "invgraph: " << e.what() << '\n';
      return kFalse;
    } catch (TrustError const& e) {
      err << "invgraph: untrusted: " << e.what() << '\n';
      return kUsage;
    } catch (std::exception const& e) {
      err << "invgraph: " << e.what() << '\n';
      return kUsage;
    }
  }

}  // namespace invgraph::cli
