#pragma once

// JSON file format ("ncat/1") for graphs, composition tables, morphisms,
// transformations and modifications, and the machine-readable report format
// ("ncat-report/1").
//
// A file holds one main structure at the top level and optionally further
// named structures under "structures". Cell ids are strings in the file and
// dense indices in memory. Serialization is canonical: keys sorted, cells in
// index order, table entries in lexicographic key order, two-space indent,
// trailing newline.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ncat/composition.hpp"
#include "ncat/graph.hpp"
#include "ncat/morphisms.hpp"
#include "ncat/report.hpp"

namespace ncat::io {

  inline constexpr std::string_view format_version = "ncat/1";
  inline constexpr std::string_view report_version = "ncat-report/1";
  inline constexpr std::string_view main_name      = "main";

  struct NamedMorphism {
    std::string   name;
    std::string   domain;
    std::string   codomain;
    GraphMorphism morphism;
  };

  struct NamedTransformation {
    std::string    name;
    std::string    f;
    std::string    g;
    Transformation transformation;
  };

  struct NamedModification {
    std::string  name;
    std::string  s;
    std::string  t;
    Modification modification;
  };

  struct Document {
    CategoryStructure                        main;
    std::map<std::string, CategoryStructure> structures;
    std::vector<NamedMorphism>               morphisms;
    std::vector<NamedTransformation>         transformations;
    std::vector<NamedModification>           modifications;

    explicit Document(CategoryStructure s) : main(std::move(s)) {}

    // "main" names the top-level structure. Throws dangling_reference.
    CategoryStructure const&   structure(std::string_view name) const;
    NamedMorphism const&       morphism(std::string_view name) const;
    NamedTransformation const& transformation(std::string_view name) const;
    NamedModification const&   modification(std::string_view name) const;

    friend bool operator==(Document const& a, Document const& b);
  };

  // The main graph only, before semantic validation. References are
  // resolved, so dangling ids throw here.
  GraphData parse_graph_data(std::string_view text);

  // Throws Error (syntax_error with line and column, unknown_version,
  // dangling_reference, schema_error, not_composable) or
  // GraphValidationError.
  Document parse(std::string_view text);
  Document read_file(std::filesystem::path const& path);

  std::string serialize(Document const& doc);
  std::string serialize(CategoryStructure const& s);
  std::string serialize(NGraph const& g);

  nlohmann::json to_json(Document const& doc);

  struct ReportDocument {
    std::string                  command;
    AxiomReport                  report;
    std::optional<std::uint64_t> raw_count;
    std::optional<std::uint64_t> iso_count;
    // false when a node or time budget cut the work short
    bool                         exhausted = true;
    double                       seconds   = 0.0;
    // Subcommand-specific payload (generated documents, graph summaries).
    nlohmann::json               data = nlohmann::json::object();

    // "limit" if not exhausted, else "fail" if any check failed, else "pass".
    std::string verdict() const;
    // 3, 1 or 0 following verdict().
    int exit_code() const;
  };

  nlohmann::json to_json(AxiomResult const& r);
  nlohmann::json to_json(ReportDocument const& r);

}  // namespace ncat::io
