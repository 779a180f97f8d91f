#pragma once

// Composition tables over an n-graph and the axiom checkers.
//
// Composition is written in diagram order: compose(a, b) with a : x -> y and
// b : y -> z is a cell x -> z, "a first, then b". A vertical table at level j
// composes (j+1)-cells along their j-dimensional boundary; a horizontal table
// at level j composes (j+2)-cells along their j-dimensional boundary. The
// level -1 vertical table is a product on 0-cells and is only allowed over a
// monoidal carrier (a single (-1)-cell).

#include <array>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncat/graph.hpp"
#include "ncat/report.hpp"

namespace ncat {

  struct AxiomFlags {
    bool global      = false;
    bool unital      = false;
    bool associative = false;
    bool interchange = false;
    bool groupoid    = false;

    friend bool operator==(AxiomFlags const&, AxiomFlags const&) = default;
  };

  // Comma separated flag names, e.g. "global,unital,associative". "partial"
  // and the empty string mean no flags. Throws schema_error on unknown names.
  AxiomFlags  parse_flags(std::string_view csv);
  std::string to_string(AxiomFlags const& f);

  enum class TableKind { vertical, horizontal };

  std::string_view to_string(TableKind k) noexcept;

  // A partial binary operation on the cells of one dimension, stored densely.
  // Typing of values is not enforced here (enumeration holds partially
  // filled, possibly mistyped candidates); check_typing decides it.
  class CompTable {
   public:
    CompTable(NGraph const& g, TableKind kind, int level);

    TableKind kind() const noexcept {
      return _kind;
    }
    int level() const noexcept {
      return _level;
    }
    // Dimension of the composed cells.
    int cell_dim() const noexcept {
      return _kind == TableKind::vertical ? _level + 1 : _level + 2;
    }
    Index size() const noexcept {
      return _m;
    }

    Index get(Index a, Index b) const {
      return _v[a * _m + b];
    }
    bool defined(Index a, Index b) const {
      return get(a, b) != undefined;
    }

    // Throws not_composable if (a, b) does not match along the level.
    void set(NGraph const& g, Index a, Index b, Index value);
    void set_unchecked(Index a, Index b, Index value) {
      _v[a * _m + b] = value;
    }
    void erase(Index a, Index b) {
      _v[a * _m + b] = undefined;
    }

    // Defined entries (a, b, value) in lexicographic key order.
    std::vector<std::array<Index, 3>> entries() const;
    std::size_t                       defined_count() const;

    std::vector<Index> const& raw() const noexcept {
      return _v;
    }

    friend bool operator==(CompTable const&, CompTable const&) = default;

   private:
    TableKind          _kind;
    int                _level;
    Index              _m;
    std::vector<Index> _v;
  };

  // True iff (a, b) can be composed by a table of this kind and level.
  bool composable(NGraph const& g, TableKind kind, int level, Index a, Index b);

  // Cooperation: z : x -> y  |->  (w, p, q) with p : x -> w, q : w -> y.
  struct CoEntry {
    Index w, p, q;
    friend bool operator==(CoEntry const&, CoEntry const&) = default;
  };

  struct CocompTable {
    int                     level = 0;
    std::map<Index, CoEntry> entries;

    friend bool operator==(CocompTable const&, CocompTable const&) = default;
  };

  struct CategoryStructure {
    std::shared_ptr<NGraph const> graph;
    std::map<int, CompTable>      vtables;
    std::map<int, CompTable>      htables;
    std::map<int, CocompTable>    cotables;
    AxiomFlags                    flags;

    explicit CategoryStructure(std::shared_ptr<NGraph const> g,
                               AxiomFlags                    f = {})
        : graph(std::move(g)), flags(f) {}

    // Creates an empty table on first use. Throws bad_level for a level
    // outside the graph and level_unavailable for level -1 over a carrier
    // that is not monoidal.
    CompTable& vertical(int level);
    CompTable& horizontal(int level);

    CompTable const* find_vertical(int level) const;
    CompTable const* find_horizontal(int level) const;

    friend bool operator==(CategoryStructure const& a,
                           CategoryStructure const& b) {
      return *a.graph == *b.graph && a.vtables == b.vtables
             && a.htables == b.htables && a.cotables == b.cotables
             && a.flags == b.flags;
    }
  };

  AxiomReport check_typing(CategoryStructure const& s);
  AxiomReport check_global(CategoryStructure const& s, int level);
  AxiomReport check_associativity(CategoryStructure const& s, int level);
  AxiomReport check_units(CategoryStructure const& s, int level);
  // Needs the vertical table at level + 1 and the horizontal table at level;
  // throws missing_tables otherwise.
  AxiomReport check_interchange(CategoryStructure const& s, int level);
  // Throws units_required if the unit law fails at this level.
  AxiomReport check_groupoid(CategoryStructure const& s, int level);
  AxiomReport check_cocategory(NGraph const& g, CocompTable const& d);

  // Table lookup. Throws no_table_at_level, not_composable or not_defined.
  Index compose(CategoryStructure const& s, Index a, Index b, int level);

  // Typing always; the rest per s.flags over every table present.
  AxiomReport check_category(CategoryStructure const& s);

}  // namespace ncat
