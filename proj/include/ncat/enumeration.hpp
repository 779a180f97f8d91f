#pragma once

// Exhaustive search for composition tables on a fixed n-graph, classification
// up to graph automorphism, and an unpruned reference search.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncat/composition.hpp"
#include "ncat/graph.hpp"

namespace ncat {

  struct EnumSpec {
    // Levels that get a vertical table. Empty means 0..n-1.
    std::vector<int> levels;
    AxiomFlags       flags;
    // Adds a horizontal table at level j whenever j and j+1 are both levels.
    bool include_horizontal = false;
    // Keep only tables that cannot be extended by one more entry.
    bool maximal_only = false;

    std::uint64_t max_nodes           = 10'000'000;
    double        time_budget_seconds = 60.0;
    std::size_t   max_representatives = 1000;
  };

  struct EnumResult {
    std::uint64_t                  raw_count = 0;
    std::uint64_t                  iso_count = 0;
    std::vector<CategoryStructure> representatives;
    bool                           exhausted = true;
    // canonical form -> number of structures in that class
    std::map<std::string, std::uint64_t> canonical_counts;
    std::uint64_t                  nodes         = 0;
    std::uint64_t                  branch_points = 0;
  };

  // Resolved levels, ascending. Throws bad_level or level_unavailable.
  std::vector<int> resolve_levels(NGraph const& g, EnumSpec const& spec);

  // The empty structure the search fills in: one vertical table per level,
  // horizontal tables as requested, flags from `spec`.
  CategoryStructure blank_structure(std::shared_ptr<NGraph const> g,
                                    EnumSpec const&               spec);

  EnumResult enumerate_structures(NGraph const& g, EnumSpec const& spec);

  // Tries every cell (and, unless global, "undefined") for every composable
  // key and filters with check_category. Throws space_too_large when the
  // number of assignments exceeds `bound`.
  EnumResult brute_force_oracle(NGraph const& g,
                                EnumSpec const& spec,
                                std::uint64_t  bound = 1'000'000);

  // Number of assignments brute_force_oracle would visit, saturating at
  // UINT64_MAX.
  std::uint64_t oracle_space(NGraph const& g, EnumSpec const& spec);

  // Minimum over the automorphism group of the table serialization: each
  // table contributes its kind and level, then one 4-byte big-endian value
  // per composable key in lexicographic order (0xFFFFFFFF when undefined).
  std::string canonical_form(CategoryStructure const& s);
  std::string canonical_form(CategoryStructure const&         s,
                             std::vector<Automorphism> const& auts);
  // Serialization under the identity relabeling.
  std::string serialize_tables(CategoryStructure const& s);

  std::string to_hex(std::string const& bytes);

  // True iff s passes check_category and no undefined composable entry can
  // be filled in with the result still passing.
  bool is_maximal(CategoryStructure const& s);

  struct SkeletalCertificate {
    bool                             unique        = false;
    std::uint64_t                    raw_count     = 0;
    std::uint64_t                    branch_points = 0;
    std::optional<CategoryStructure> structure;
  };

  // Throws not_skeletal. Searches with flags {global}.
  SkeletalCertificate verify_skeletal_uniqueness(NGraph const& g);

}  // namespace ncat
