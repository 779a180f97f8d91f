#pragma once

// Finite truncated globular carriers ("n-graphs").
//
// An n-graph stores cells in dimensions -1..n. Dimension -1 is the structure
// tail (one or two cells); dimensions above n are degenerate copies of
// dimension n and are never stored. Every cell is identified positionally by
// (dimension, index); string ids and labels are carried as metadata only.

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncat/error.hpp"

namespace ncat {

  using Index = std::uint32_t;

  // Marks an absent value: an undefined table entry, an unassigned
  // component, a cell that is not an identity.
  inline constexpr Index undefined = std::numeric_limits<Index>::max();

  struct CellId {
    int   dim   = 0;
    Index index = 0;

    friend auto operator<=>(CellId const&, CellId const&) = default;
  };

  enum class Side { source, target };

  // Mutable description of a graph, before validation.
  //
  // src[d] and tgt[d] for d in [0, n] map dim-d cells to dim-(d-1) cells;
  // idn[d] for d in [0, n-1] maps dim-d cells to dim-(d+1) cells. ids and
  // labels are indexed by dim + 1 and may be left empty, in which case
  // validation fills in default ids.
  struct GraphData {
    int                                   n    = 1;
    Index                                 tail = 1;
    std::vector<std::vector<Index>>       src;
    std::vector<std::vector<Index>>       tgt;
    std::vector<std::vector<Index>>       idn;
    std::vector<std::vector<std::string>> ids;
    std::vector<std::vector<std::string>> labels;

    // Empty graph with the right number of dimensions.
    static GraphData empty(int n, Index tail = 1);

    // Appends a dim-d cell and returns its index. For d = 0 the src/tgt are
    // (-1)-cells. Does not touch identities.
    Index add_cell(int d, Index s, Index t, std::string id = {});

    Index count(int d) const;

    friend bool operator==(GraphData const&, GraphData const&) = default;
  };

  struct Violation {
    ErrorKind   kind;
    CellId      cell;
    std::string message;
  };

  class GraphValidationError : public Error {
   public:
    explicit GraphValidationError(std::vector<Violation> v);

    std::vector<Violation> const& violations() const noexcept {
      return _violations;
    }

   private:
    std::vector<Violation> _violations;
  };

  // Every violated condition, each naming the offending cell. Empty means the
  // data describes a valid n-graph.
  std::vector<Violation> check_graph(GraphData const& data);

  struct StructureTail {
    Index                             minus_one_count = 1;
    std::optional<std::pair<Index, Index>> zero_type;  // absent with no 0-cells
  };

  struct HomSet {
    int                level = 0;
    CellId             source;
    CellId             target;
    std::vector<Index> members;  // indices of dim level+1 cells
  };

  class NGraph {
   public:
    // Throws GraphValidationError listing every violated condition.
    static NGraph validate(GraphData data);

    int n() const noexcept {
      return _data.n;
    }

    Index count(int dim) const;

    Index src(int dim, Index i) const {
      return _data.src[dim][i];
    }
    Index tgt(int dim, Index i) const {
      return _data.tgt[dim][i];
    }
    Index boundary(int dim, Index i, Side side) const {
      return side == Side::source ? src(dim, i) : tgt(dim, i);
    }
    Index idn(int dim, Index i) const {
      return _data.idn[dim][i];
    }
    // x if the dim-`dim` cell i equals idn(x), else `undefined`.
    Index identity_of(int dim, Index i) const;

    bool is_identity(int dim, Index i) const {
      return identity_of(dim, i) != undefined;
    }

    // Cells of dim level+1 with the given source and target (level-cells).
    // Empty span for an empty hom-set.
    std::span<Index const> hom(int level, Index x, Index y) const;

    std::string const& id(CellId c) const {
      return _data.ids[c.dim + 1][c.index];
    }
    std::string id(int dim, Index i) const {
      return _data.ids[dim + 1][i];
    }
    std::string label(CellId c) const;
    std::optional<CellId> find(std::string const& id) const;

    StructureTail tail() const;

    GraphData const& data() const noexcept {
      return _data;
    }

    friend bool operator==(NGraph const& a, NGraph const& b) {
      return a._data == b._data;
    }

   private:
    explicit NGraph(GraphData data);

    GraphData _data;
    // _hom[level + 1] : (source, target) -> members
    std::vector<std::map<std::pair<Index, Index>, std::vector<Index>>> _hom;
    // _identity_of[dim] for dim in [1, n]
    std::vector<std::vector<Index>>                 _identity_of;
    std::map<std::string, CellId>                   _by_id;
  };

  // Default id of a cell, used when a GraphData carries none.
  std::string default_id(int dim, Index i);

  NGraph validate_graph(GraphData data);

  // Throws dimension_mismatch if x and y differ in dimension and bad_level if
  // the dimension is outside [-1, n-1].
  HomSet hom_set(NGraph const& g, CellId x, CellId y);

  std::pair<CellId, CellId> cell_type(NGraph const& g, CellId z);

  // Applies src (or tgt) until dimension j. Throws bad_level unless
  // -1 <= j < z.dim.
  CellId iterated_boundary(NGraph const& g, CellId z, int j, Side side);
  Index  iterated_boundary(NGraph const& g, int dim, Index z, int j, Side side);

  bool is_skeletal(NGraph const& g);

  // Swaps source and target at dimension i only. 1 <= i <= n.
  NGraph opposite(NGraph const& g, int i);

  bool is_monoidal_carrier(NGraph const& g);

  struct HomGraph {
    NGraph graph;
    // embedding[k + 1][c] is the original index of hom-graph cell (k, c);
    // original dimension is dim(x) + 1 + k.
    std::vector<std::vector<Index>> embedding;
  };

  // The graph of the hom tower over (x, y): its objects are hom_set(g, x, y)
  // and its k-cells are the (dim(x) + 1 + k)-cells of g whose dim(x)
  // boundaries are x and y. Its tail is {x, y}.
  HomGraph hom_graph(NGraph const& g, CellId x, CellId y);

  // A dimension-indexed family of bijections; maps[d + 1] for d in [-1, n].
  struct Automorphism {
    std::vector<std::vector<Index>> maps;

    Index operator()(int dim, Index i) const {
      return maps[dim + 1][i];
    }

    friend auto operator<=>(Automorphism const&, Automorphism const&) = default;
  };

  Automorphism identity_automorphism(NGraph const& g);
  Automorphism compose(Automorphism const& first, Automorphism const& second);
  Automorphism inverse(Automorphism const& a);
  bool         is_automorphism(NGraph const& g, Automorphism const& a);

  // All automorphisms fixing the tail pointwise, in lexicographic order of
  // their maps (identity first). Throws space_too_large past `max_count`.
  std::vector<Automorphism> automorphisms(NGraph const& g,
                                          std::size_t max_count = 1'000'000);

}  // namespace ncat
