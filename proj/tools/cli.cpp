#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "ncat/cobordism.hpp"
#include "ncat/enumeration.hpp"
#include "ncat/generators.hpp"
#include "ncat/io.hpp"
#include "ncat/morphisms.hpp"

namespace ncat::cli {

  using nlohmann::json;

  namespace {

    constexpr std::size_t shown_counterexamples = 10;

    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    struct Options {
      bool json = false;
      bool all  = false;

      std::string file;
      std::string structure = std::string(io::main_name);
      std::string flags;
      std::string output;

      // enumerate
      std::vector<int> levels;
      bool             horizontal = false;
      bool             maximal    = false;
      bool             oracle     = false;
      std::uint64_t    max_nodes   = 10'000'000;
      double           time_budget = 60.0;
      std::size_t      show        = 0;

      int level = 1;

      // morphisms
      std::string      m, f, g, t, mod, to;
      std::string      from = std::string(io::main_name);
      std::vector<int> contravariant;
      std::vector<int> dims{0};
      bool             enumerate = false;

      // gen
      std::size_t   max_points = 2;
      std::size_t   max_size   = 2;
      int           gen_n      = 1;
      Index         objects    = 2;
      Index         tail       = 1;
      std::uint64_t seed       = 1;
      Index         order      = 2;
    };

    // Output document of gen and opposite.
    struct Outcome {
      io::ReportDocument          report;
      std::optional<io::Document> document;
    };

    std::string read_text(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error(ErrorKind::syntax_error, "cannot open " + path);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    void env_defaults(Options& o) {
      if (char const* v = std::getenv("NCAT_MAX_NODES"); v && *v) {
        try {
          o.max_nodes = std::stoull(v);
        } catch (std::exception const&) {
          throw UsageError("NCAT_MAX_NODES must be a non-negative integer");
        }
      }
      if (char const* v = std::getenv("NCAT_TIME_BUDGET"); v && *v) {
        try {
          o.time_budget = std::stod(v);
        } catch (std::exception const&) {
          throw UsageError("NCAT_TIME_BUDGET must be a number of seconds");
        }
      }
    }

    std::string cell_name(GraphData const& d, CellId c) {
      if (std::size_t(c.dim + 1) < d.ids.size() && c.index < d.ids[c.dim + 1].size()
          && !d.ids[c.dim + 1][c.index].empty()) {
        return d.ids[c.dim + 1][c.index];
      }
      return default_id(c.dim, c.index);
    }

    json graph_summary(CategoryStructure const& s) {
      NGraph const& g = *s.graph;
      json          j;
      j["n"]         = g.n();
      j["tail"]      = g.count(-1);
      j["cells"]     = json::array();
      for (int k = 0; k <= g.n(); ++k) {
        j["cells"].push_back(g.count(k));
      }
      j["skeletal"]  = is_skeletal(g);
      j["monoidal"]  = is_monoidal_carrier(g);
      j["flags"]     = to_string(s.flags);
      j["tables"]    = json::array();
      for (auto const& [level, _] : s.vtables) {
        j["tables"].push_back({{"kind", level == -1 ? "minus-one" : "vertical"},
                               {"level", level}});
      }
      for (auto const& [level, _] : s.htables) {
        j["tables"].push_back({{"kind", "horizontal"}, {"level", level}});
      }
      for (auto const& [level, _] : s.cotables) {
        j["tables"].push_back({{"kind", "co"}, {"level", level}});
      }
      auto auts           = automorphisms(g, 1000);
      j["automorphisms"]  = auts.size();
      j["automorphisms_capped"] = auts.size() >= 1000;
      return j;
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    Outcome cmd_validate(Options const& o) {
      Outcome   r;
      GraphData d = io::parse_graph_data(read_text(o.file));
      AxiomResult res("graph");
      for (auto const& v : check_graph(d)) {
        res.counterexamples.push_back(
            {{cell_name(d, v.cell)}, "", "", std::string(to_string(v.kind)) + ": " + v.message});
      }
      r.report.report.add(res.settle());
      return r;
    }

    CategoryStructure selected(io::Document const& doc, Options const& o) {
      CategoryStructure s = doc.structure(o.structure);
      if (!o.flags.empty()) {
        s.flags = parse_flags(o.flags);
      }
      return s;
    }

    Outcome cmd_check(Options const& o) {
      Outcome r;
      auto    doc = io::read_file(o.file);
      r.report.report = check_category(selected(doc, o));
      return r;
    }

    Outcome cmd_enumerate(Options const& o) {
      Outcome  r;
      auto     doc = io::read_file(o.file);
      auto     s   = selected(doc, o);
      EnumSpec spec;
      spec.levels              = o.levels;
      spec.flags               = s.flags;
      spec.include_horizontal  = o.horizontal;
      spec.maximal_only        = o.maximal;
      spec.max_nodes           = o.max_nodes;
      spec.time_budget_seconds = o.time_budget;

      auto res = enumerate_structures(*s.graph, spec);
      r.report.raw_count = res.raw_count;
      r.report.iso_count = res.iso_count;
      r.report.exhausted = res.exhausted;
      r.report.data["nodes"]         = res.nodes;
      r.report.data["branch_points"] = res.branch_points;
      r.report.data["flags"]         = to_string(spec.flags);
      json reps = json::array();
      for (std::size_t i = 0; i < std::min(o.show, res.representatives.size()); ++i) {
        reps.push_back(io::to_json(io::Document(res.representatives[i])));
      }
      r.report.data["representatives"] = std::move(reps);

      if (o.oracle) {
        AxiomResult agree("oracle-agreement");
        try {
          auto ref = brute_force_oracle(*s.graph, spec);
          if (ref.raw_count != res.raw_count) {
            agree.counterexamples.push_back({{}, std::to_string(ref.raw_count),
                                             std::to_string(res.raw_count), "raw count"});
          }
          if (ref.canonical_counts != res.canonical_counts) {
            agree.counterexamples.push_back({{}, std::to_string(ref.iso_count),
                                             std::to_string(res.iso_count),
                                             "canonical form multiset"});
          }
          r.report.report.add(agree.settle());
        } catch (Error const& e) {
          if (e.kind() != ErrorKind::space_too_large) {
            throw;
          }
          r.report.report.add(AxiomResult::not_applicable("oracle-agreement", {}, e.what()));
          r.report.exhausted = false;
        }
      }
      return r;
    }

    Outcome cmd_skeletal(Options const& o) {
      Outcome r;
      auto    doc = io::read_file(o.file);
      auto    s   = selected(doc, o);
      try {
        auto cert = verify_skeletal_uniqueness(*s.graph);
        r.report.report.add(AxiomResult("skeletal"));
        AxiomResult unique("unique-structure");
        if (!cert.unique) {
          unique.counterexamples.push_back(
              {{}, "1", std::to_string(cert.raw_count), "global structures"});
        }
        r.report.report.add(unique.settle());
        r.report.raw_count = cert.raw_count;
        if (cert.unique) {
          r.report.iso_count = 1;
        }
        r.report.data["branch_points"] = cert.branch_points;
      } catch (Error const& e) {
        if (e.kind() != ErrorKind::not_skeletal) {
          throw;
        }
        AxiomResult sk("skeletal");
        sk.counterexamples.push_back({{}, "", "", e.what()});
        r.report.report.add(sk.settle());
      }
      return r;
    }

    Outcome cmd_opposite(Options const& o) {
      Outcome r;
      auto    doc = io::read_file(o.file);
      auto    g   = opposite(*doc.structure(o.structure).graph, o.level);
      r.document.emplace(CategoryStructure(std::make_shared<NGraph const>(std::move(g))));
      r.report.data["level"] = o.level;
      return r;
    }

    Outcome cmd_info(Options const& o) {
      Outcome r;
      auto    doc = io::read_file(o.file);
      r.report.data = graph_summary(doc.structure(o.structure));
      json names    = json::array();
      for (auto const& [name, _] : doc.structures) {
        names.push_back(name);
      }
      r.report.data["structures"] = std::move(names);
      auto list = [](auto const& v) {
        json out = json::array();
        for (auto const& x : v) {
          out.push_back(x.name);
        }
        return out;
      };
      r.report.data["morphisms"]       = list(doc.morphisms);
      r.report.data["transformations"] = list(doc.transformations);
      r.report.data["modifications"]   = list(doc.modifications);
      return r;
    }

    Outcome cmd_morphism(Options const& o) {
      Outcome r;
      auto    doc = io::read_file(o.file);
      auto const& m = doc.morphism(o.m).morphism;
      if (o.contravariant.empty()) {
        r.report.report = check_graph_morphism(m);
      } else {
        VarianceSpec v;
        v.contravariant_levels.insert(o.contravariant.begin(), o.contravariant.end());
        r.report.report = check_contravariant(m, v);
      }
      return r;
    }

    json morphism_json(GraphMorphism const& m) {
      json cells = json::array();
      for (int k = -1; k <= m.domain->n(); ++k) {
        json one = json::object();
        for (Index i = 0; i < m.domain->count(k); ++i) {
          one[m.domain->id(k, i)] = m.codomain->id(k, m(k, i));
        }
        cells.push_back(std::move(one));
      }
      return cells;
    }

    Outcome cmd_functor(Options const& o) {
      Outcome r;
      auto    doc = io::read_file(o.file);
      if (o.enumerate) {
        if (!o.f.empty()) {
          throw UsageError("functor: --enumerate takes --from/--to, not --f");
        }
        auto fs = enumerate_functors(doc.structure(o.from), doc.structure(o.to), o.max_nodes);
        r.report.raw_count = fs.size();
        json list          = json::array();
        for (std::size_t i = 0; i < std::min(o.show, fs.size()); ++i) {
          list.push_back(morphism_json(fs[i]));
        }
        r.report.data["functors"] = std::move(list);
        return r;
      }
      if (o.f.empty()) {
        throw UsageError("functor: give --f NAME or --enumerate --from A --to B");
      }
      auto const& nm = doc.morphism(o.f);
      r.report.report = check_functor(nm.morphism, doc.structure(nm.domain),
                                      doc.structure(nm.codomain));
      return r;
    }

    Outcome cmd_nat(Options const& o) {
      Outcome r;
      auto    doc = io::read_file(o.file);
      if (!o.t.empty()) {
        auto const& nt = doc.transformation(o.t);
        if ((!o.f.empty() && o.f != nt.f) || (!o.g.empty() && o.g != nt.g)) {
          throw UsageError("nat: " + o.t + " goes from " + nt.f + " to " + nt.g);
        }
        auto const& f = doc.morphism(nt.f);
        r.report.report = check_transformation(nt.transformation, doc.structure(f.domain),
                                               doc.structure(f.codomain));
        return r;
      }
      if (o.f.empty() || o.g.empty()) {
        throw UsageError("nat: give --t NAME, or --f and --g to enumerate");
      }
      auto const& f = doc.morphism(o.f);
      auto const& g = doc.morphism(o.g);
      std::set<int> dims(o.dims.begin(), o.dims.end());
      auto ts = enumerate_transformations(f.morphism, g.morphism, doc.structure(f.domain),
                                          doc.structure(f.codomain), dims, o.max_nodes);
      r.report.raw_count = ts.size();
      return r;
    }

    Outcome cmd_modification(Options const& o) {
      Outcome     r;
      auto        doc = io::read_file(o.file);
      auto const& md  = doc.modification(o.mod);
      auto const& f   = doc.morphism(doc.transformation(md.s).f);
      r.report.report = check_modification(md.modification, doc.structure(f.domain),
                                           doc.structure(f.codomain));
      return r;
    }

    Outcome generated(CategoryStructure s, std::string what) {
      Outcome r;
      r.document.emplace(std::move(s));
      r.report.data["generator"] = std::move(what);
      return r;
    }

    ////////////////////////////////////////////////////////////////////////
    // Output
    ////////////////////////////////////////////////////////////////////////

    void print_human(io::ReportDocument const& r, bool all, std::ostream& out) {
      std::string v = r.verdict();
      for (auto& c : v) {
        c = char(std::toupper(static_cast<unsigned char>(c)));
      }
      out << r.command << ": " << v << "\n";
      for (auto const& res : r.report.results) {
        out << "  [" << to_string(res.verdict) << "] " << res.axiom;
        if (res.level) {
          out << " (level " << *res.level << ")";
        }
        if (!res.counterexamples.empty()) {
          out << ": " << res.counterexamples.size() << " counterexample"
              << (res.counterexamples.size() == 1 ? "" : "s");
        }
        if (!res.note.empty()) {
          out << ": " << res.note;
        }
        out << "\n";
        std::size_t const limit = all ? res.counterexamples.size()
                                      : std::min(shown_counterexamples,
                                                 res.counterexamples.size());
        for (std::size_t i = 0; i < limit; ++i) {
          auto const& c = res.counterexamples[i];
          out << "      ";
          if (!c.cells.empty()) {
            out << "(";
            for (std::size_t k = 0; k < c.cells.size(); ++k) {
              out << (k ? ", " : "") << c.cells[k];
            }
            out << ") ";
          }
          if (!c.expected.empty() || !c.actual.empty()) {
            out << "expected " << c.expected << ", got " << c.actual << " ";
          }
          out << "[" << c.what << "]\n";
        }
        if (limit < res.counterexamples.size()) {
          out << "      ... " << res.counterexamples.size() - limit
              << " more (use --all)\n";
        }
        if (!res.asymmetries.empty()) {
          out << "      " << res.asymmetries.size() << " one-sided case"
              << (res.asymmetries.size() == 1 ? "" : "s") << "\n";
        }
      }
      if (r.raw_count) {
        out << "raw: " << *r.raw_count << "\n";
      }
      if (r.iso_count) {
        out << "iso: " << *r.iso_count << "\n";
      }
      if (!r.exhausted) {
        out << "stopped early: limit reached\n";
      }
      if (r.command == "info") {
        out << r.data.dump(2) << "\n";
      }
    }

    json error_report(std::string const& command, std::string const& verdict, int code,
                      std::string const& kind, std::string const& message) {
      io::ReportDocument r;
      r.command      = command;
      r.exhausted    = verdict != "limit";
      json j         = io::to_json(r);
      j["verdict"]   = verdict;
      j["exit_code"] = code;
      j["error"]     = {{"kind", kind}, {"message", message}};
      return j;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Finite n-graphs and n-categories: validation, axiom checks, "
                 "enumeration, morphisms, examples.",
                 "ncat"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Print a machine-readable report");
    app.add_flag("--all", o.all, "Print every counterexample");

    auto file = [&](CLI::App* sub) {
      sub->add_option("file", o.file, "Input document")->required();
    };
    auto structure = [&](CLI::App* sub) {
      sub->add_option("--structure", o.structure, "Named structure in the file");
    };

    auto* validate = app.add_subcommand("validate", "Validate the main graph");
    file(validate);

    auto* check = app.add_subcommand("check", "Check the category axioms");
    file(check);
    structure(check);
    check->add_option("--flags", o.flags, "Axiom flags, e.g. global,unital,associative");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate composition tables");
    file(enumerate);
    structure(enumerate);
    enumerate->add_option("--flags", o.flags, "Axiom flags");
    enumerate->add_option("--levels", o.levels, "Levels with a vertical table")
        ->delimiter(',')
        ->allow_extra_args(false);
    enumerate->add_flag("--horizontal", o.horizontal, "Add horizontal tables");
    enumerate->add_flag("--maximal", o.maximal, "Keep only maximal partial tables");
    enumerate->add_flag("--oracle", o.oracle, "Cross-check with the brute-force search");
    enumerate->add_option("--max-nodes", o.max_nodes, "Search node budget");
    enumerate->add_option("--time-budget", o.time_budget, "Search time budget (s)");
    enumerate->add_option("--show", o.show, "Include this many representatives");

    auto* skeletal = app.add_subcommand("skeletal", "Check skeletal uniqueness");
    file(skeletal);
    structure(skeletal);

    auto* opp = app.add_subcommand("opposite", "Swap source and target at one level");
    file(opp);
    structure(opp);
    opp->add_option("--level", o.level, "Level in [1, n]")->required();
    opp->add_option("-o,--output", o.output, "Write the document here");

    auto* info = app.add_subcommand("info", "Summarize a document");
    file(info);
    structure(info);

    auto* morphism = app.add_subcommand("morphism", "Check a graph morphism");
    file(morphism);
    morphism->add_option("--m", o.m, "Morphism name")->required();
    morphism->add_option("--contravariant", o.contravariant, "Reversed levels")
        ->delimiter(',')
        ->allow_extra_args(false);

    auto* functor = app.add_subcommand("functor", "Check or enumerate functors");
    file(functor);
    functor->add_option("--f", o.f, "Morphism name");
    functor->add_flag("--enumerate", o.enumerate, "Enumerate all functors");
    functor->add_option("--from", o.from, "Domain structure (default main)");
    functor->add_option("--to", o.to, "Codomain structure");
    functor->add_option("--max-nodes", o.max_nodes, "Search node budget");
    functor->add_option("--show", o.show, "Include this many functors");

    auto* nat = app.add_subcommand("nat", "Check or enumerate transformations");
    file(nat);
    nat->add_option("--t", o.t, "Transformation name");
    nat->add_option("--f", o.f, "Source functor");
    nat->add_option("--g", o.g, "Target functor");
    nat->add_option("--dims", o.dims, "Component dimensions")
        ->delimiter(',')
        ->allow_extra_args(false);
    nat->add_option("--max-nodes", o.max_nodes, "Search node budget");

    auto* modification = app.add_subcommand("modification", "Check a modification");
    file(modification);
    modification->add_option("--mod", o.mod, "Modification name")->required();

    auto* gen = app.add_subcommand("gen", "Generate example documents");
    gen->require_subcommand(1);
    auto* gen_cob = gen->add_subcommand("cob", "Truncated cobordism category");
    gen_cob->add_option("--max-points", o.max_points, "Boundary size bound");
    auto* gen_sets = gen->add_subcommand("sets", "Finite sets, maps and changes");
    gen_sets->add_option("--max-size", o.max_size, "Largest set (at most 3)");
    auto* gen_skel = gen->add_subcommand("skeletal", "Random skeletal graph");
    gen_skel->add_option("--n", o.gen_n, "Top dimension");
    gen_skel->add_option("--objects", o.objects, "Number of objects");
    gen_skel->add_option("--tail", o.tail, "Number of (-1)-cells");
    gen_skel->add_option("--seed", o.seed, "Random seed");
    auto* gen_monoid = gen->add_subcommand("monoid", "Cyclic group as a one-object category");
    gen_monoid->add_option("--order", o.order, "Group order");
    for (auto* sub : {gen_cob, gen_sets, gen_skel, gen_monoid}) {
      sub->add_option("-o,--output", o.output, "Write the document here");
    }

    std::string command = "ncat";
    try {
      env_defaults(o);
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      if (e.get_exit_code() == 0) {
        return app.exit(e, out, err);
      }
      if (std::find(args.begin(), args.end(), "--json") != args.end()) {
        out << error_report(command, "error", 2, "Usage", e.what()).dump(2) << "\n";
      }
      app.exit(e, out, err);
      return 2;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }

    auto const t0 = std::chrono::steady_clock::now();
    try {
      Outcome r;
      if (*validate) {
        command = "validate";
        r       = cmd_validate(o);
      } else if (*check) {
        command = "check";
        r       = cmd_check(o);
      } else if (*enumerate) {
        command = "enumerate";
        r       = cmd_enumerate(o);
      } else if (*skeletal) {
        command = "skeletal";
        r       = cmd_skeletal(o);
      } else if (*opp) {
        command = "opposite";
        r       = cmd_opposite(o);
      } else if (*info) {
        command = "info";
        r       = cmd_info(o);
      } else if (*morphism) {
        command = "morphism";
        r       = cmd_morphism(o);
      } else if (*functor) {
        command = "functor";
        r       = cmd_functor(o);
      } else if (*nat) {
        command = "nat";
        r       = cmd_nat(o);
      } else if (*modification) {
        command = "modification";
        r       = cmd_modification(o);
      } else if (*gen_cob) {
        command = "gen";
        r       = generated(build_cob_truncation(o.max_points).structure, "cob");
      } else if (*gen_sets) {
        command = "gen";
        r       = generated(sets_structure(o.max_size), "sets");
      } else if (*gen_skel) {
        command = "gen";
        std::mt19937_64 rng(o.seed);
        r = generated(CategoryStructure(std::make_shared<NGraph const>(
                          gen::skeletal_graph(o.gen_n, o.objects, o.tail, rng))),
                      "skeletal");
      } else {
        command = "gen";
        r       = generated(gen::cyclic_group(o.order), "monoid");
      }
      r.report.command = command;
      r.report.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

      if (r.document && !o.output.empty()) {
        std::ofstream f(o.output, std::ios::binary);
        f << io::serialize(*r.document);
        if (!f) {
          err << "error: cannot write " << o.output << "\n";
          return 2;
        }
      }
      if (o.json) {
        if (r.document) {
          r.report.data["document"] = io::to_json(*r.document);
        }
        out << io::to_json(r.report).dump(2) << "\n";
      } else if (r.document && o.output.empty()) {
        out << io::serialize(*r.document);
      } else {
        print_human(r.report, o.all, out);
        if (r.document) {
          out << "wrote " << o.output << "\n";
        }
      }
      return r.report.exit_code();
    } catch (UsageError const& e) {
      if (o.json) {
        out << error_report(command, "error", 2, "Usage", e.what()).dump(2) << "\n";
      }
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (Error const& e) {
      bool const limit = e.kind() == ErrorKind::space_too_large
                         || e.kind() == ErrorKind::limit_exceeded;
      int const  code  = limit ? 3 : 2;
      if (o.json) {
        out << error_report(command, limit ? "limit" : "error", code,
                            std::string(to_string(e.kind())), e.what())
                   .dump(2)
            << "\n";
      }
      err << "error: " << e.what() << "\n";
      if (auto const* gv = dynamic_cast<GraphValidationError const*>(&e)) {
        for (auto const& v : gv->violations()) {
          err << "  " << to_string(v.kind) << ": " << v.message << "\n";
        }
      }
      return code;
    }
  }

}  // namespace ncat::cli
