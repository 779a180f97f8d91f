#pragma once

// Scripted CLI invocations with their expected exit codes. Input files are
// written into a scratch directory first.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "corpus.hpp"
#include "json.hpp"

namespace ncat::test {

  struct Scenario {
    std::string              name;
    std::vector<std::string> args;
    int                      expected_exit;
  };

  struct ScenarioRun {
    int            exit_code = -1;
    nlohmann::json report;  // null unless stdout parsed as JSON
    std::string    out;
    std::string    err;
  };

  inline ScenarioRun run_cli(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    ScenarioRun        r;
    r.exit_code = cli::run(args, out, err);
    r.out       = out.str();
    r.err       = err.str();
    r.report    = nlohmann::json::parse(r.out, nullptr, false);
    if (r.report.is_discarded()) {
      r.report = nullptr;
    }
    return r;
  }

  inline std::string const minimal_graph = R"({
  "format_version": "ncat/1",
  "n": 1,
  "tail": {"minus_one": 1},
  "dims": [
    [{"id": "x", "src": "t0", "tgt": "t0"}],
    [{"id": "idx", "src": "x", "tgt": "x"}]
  ],
  "identities": [{"x": "idx"}]
})";

  inline void write_file(std::filesystem::path const& p, std::string const& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
  }

  inline std::filesystem::path scratch_dir(std::string const& tag) {
    auto dir = std::filesystem::temp_directory_path()
               / ("ncat-" + tag + "-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
  }

  inline std::vector<Scenario> write_scenarios(std::filesystem::path const& dir) {
    auto path = [&](char const* name) { return (dir / name).string(); };

    write_file(path("cob2.json"), io::serialize(build_cob_truncation(2).structure));
    write_file(path("skeletal.json"),
               io::serialize(gen::skeletal_family(1, 3, 5).at(0)));
    write_file(path("nonskeletal.json"), io::serialize(gen::one_object_graph(2)));
    write_file(path("skew.json"),
               io::serialize(gen::monoid_category({{0, 1, 2}, {1, 2, 2}, {2, 1, 2}})));
    write_file(path("z3.json"), io::serialize(gen::one_object_graph(3)));

    auto doc = morphism_document();
    auto bad = doc.transformations.at(0);
    bad.name = "Tbad";
    for (auto& c : bad.transformation.comps[0]) {
      c = 2;  // arr is not an endomorphism, so no component can be arr
    }
    doc.transformations.push_back(bad);
    write_file(path("morphisms.json"), io::serialize(doc));
    write_file(path("modifications.json"), io::serialize(modification_document()));

    std::string broken = minimal_graph;
    broken.replace(broken.find(R"({"x": "idx"})"), 12, "{}");
    write_file(path("broken.json"), broken);
    write_file(path("syntax.json"), "{ \"format_version\": \"ncat/1\",\n  oops }\n");
    std::string dangling = minimal_graph;
    dangling.replace(dangling.find(R"("tgt": "x"})"), 11, R"("tgt": "q7"})");
    write_file(path("dangling.json"), dangling);

    return {
        {"check cobordism truncation",
         {"check", "--flags", "global,unital,associative", path("cob2.json")}, 0},
        {"enumerate skeletal graph", {"enumerate", "--flags", "global", path("skeletal.json")}, 0},
        {"nat with a bad component",
         {"nat", path("morphisms.json"), "--f", "F0", "--g", "F0", "--t", "Tbad"}, 1},
        {"check a non-associative table", {"check", path("skew.json")}, 1},
        {"validate a graph missing an identity", {"validate", path("broken.json")}, 1},
        {"syntax error", {"check", path("syntax.json")}, 2},
        {"dangling reference", {"validate", path("dangling.json")}, 2},
        {"node budget exhausted",
         {"enumerate", "--flags", "global,unital,associative", "--max-nodes", "2",
          path("z3.json")},
         3},
        {"functor check", {"functor", path("morphisms.json"), "--f", "G"}, 0},
        {"modification check", {"modification", path("modifications.json"), "--mod", "M"}, 0},
        {"skeletal on a non-skeletal graph", {"skeletal", path("nonskeletal.json")}, 1},
        {"oracle cross-check",
         {"enumerate", "--flags", "global,unital,associative", "--oracle", path("z3.json")}, 0},
    };
  }

}  // namespace ncat::test
