#pragma once

// One-dimensional oriented cobordisms as signed point matchings, and the
// finite categories built from them. Also the 2-graph of finite sets, maps
// and changes of maps.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ncat/composition.hpp"
#include "ncat/graph.hpp"

namespace ncat {

  enum class Sign : std::uint8_t { plus, minus };

  struct SignedBoundary {
    std::vector<Sign> signs;

    std::size_t size() const noexcept {
      return signs.size();
    }

    friend auto operator<=>(SignedBoundary const&, SignedBoundary const&) = default;
  };

  // "[+-+]"; "[]" for the empty boundary.
  std::string    to_string(SignedBoundary const& b);
  // Accepts the to_string format. Throws syntax_error.
  SignedBoundary parse_boundary(std::string_view s);

  SignedBoundary reverse_orientation(SignedBoundary const& b);
  SignedBoundary concat(SignedBoundary const& a, SignedBoundary const& b);

  // A cobordism source -> target. Points are numbered with the reversed
  // source first (0..|A|-1), then the target (|A|..|A|+|B|-1);
  // pairing[p] is the partner of point p.
  struct MatchDiagram {
    SignedBoundary     source;
    SignedBoundary     target;
    std::vector<Index> pairing;

    std::size_t points() const noexcept {
      return pairing.size();
    }

    friend auto operator<=>(MatchDiagram const&, MatchDiagram const&) = default;
  };

  // Sign of point p within A* followed by B.
  Sign point_sign(MatchDiagram const& m, Index p);

  // Perfect matching, involutive, and each pair joins a + and a - point.
  bool is_valid(MatchDiagram const& m);

  // "[+-] -> [] {0-1}".
  std::string describe(MatchDiagram const& m);

  MatchDiagram make_cylinder(SignedBoundary const& a);

  // Follows strands through the shared boundary; closed loops are dropped.
  // Throws boundary_mismatch unless m.target == n.source.
  MatchDiagram glue(MatchDiagram const& m, MatchDiagram const& n);

  MatchDiagram disjoint_union(MatchDiagram const& m, MatchDiagram const& n);

  // Every valid diagram a -> b, in lexicographic order of pairings.
  std::vector<MatchDiagram> all_diagrams(SignedBoundary const& a,
                                         SignedBoundary const& b);

  // All boundaries of length <= max_points, by length then lexicographic.
  std::vector<SignedBoundary> all_boundaries(std::size_t max_points);

  struct CobTruncation {
    CategoryStructure           structure;
    std::vector<SignedBoundary> objects;   // 0-cell i
    std::vector<MatchDiagram>   diagrams;  // 1-cell i
  };

  // Objects: boundaries with at most max_points points. 1-cells: every
  // diagram between them. Composition: glue. Flags {global, unital,
  // associative}. Throws space_too_large past `max_cells` 1-cells.
  CobTruncation build_cob_truncation(std::size_t max_points,
                                     std::size_t max_cells = 4096);

  // Sets {0..k-1} for 1 <= k <= max_size, all maps between them, and one
  // 2-cell per ordered pair of parallel maps. Throws space_too_large for
  // max_size > 3.
  NGraph gen_sets_graph(std::size_t max_size);

  // gen_sets_graph with composition of maps, composition of changes
  // (f, g) ; (g, h) = (f, h), and their horizontal composite
  // (f, g) * (h, k) = (f;h, g;k). Flags {global, unital, associative,
  // interchange}.
  CategoryStructure sets_structure(std::size_t max_size);

}  // namespace ncat
