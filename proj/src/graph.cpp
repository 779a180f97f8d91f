#include "ncat/graph.hpp"

#include <algorithm>
#include <set>

namespace ncat {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::section_violation: return "SectionViolation";
      case ErrorKind::globularity_violation: return "GlobularityViolation";
      case ErrorKind::zero_type_violation: return "ZeroTypeViolation";
      case ErrorKind::index_out_of_range: return "IndexOutOfRange";
      case ErrorKind::bad_tail_size: return "BadTailSize";
      case ErrorKind::dimension_mismatch: return "DimensionMismatch";
      case ErrorKind::bad_level: return "BadLevel";
      case ErrorKind::dimension_too_high: return "DimensionTooHigh";
      case ErrorKind::not_composable: return "NotComposable";
      case ErrorKind::not_defined: return "NotDefined";
      case ErrorKind::no_table_at_level: return "NoTableAtLevel";
      case ErrorKind::missing_tables: return "MissingTables";
      case ErrorKind::units_required: return "UnitsRequired";
      case ErrorKind::limit_exceeded: return "LimitExceeded";
      case ErrorKind::level_unavailable: return "LevelUnavailable";
      case ErrorKind::space_too_large: return "SpaceTooLarge";
      case ErrorKind::not_skeletal: return "NotSkeletal";
      case ErrorKind::unsupported: return "Unsupported";
      case ErrorKind::boundary_mismatch: return "BoundaryMismatch";
      case ErrorKind::syntax_error: return "SyntaxError";
      case ErrorKind::unknown_version: return "UnknownVersion";
      case ErrorKind::dangling_reference: return "DanglingReference";
      case ErrorKind::schema_error: return "SchemaError";
    }
    return "Unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // GraphData
  ////////////////////////////////////////////////////////////////////////

  GraphData GraphData::empty(int n, Index tail) {
    GraphData d;
    d.n    = n;
    d.tail = tail;
    d.src.resize(n + 1);
    d.tgt.resize(n + 1);
    d.idn.resize(n);
    return d;
  }

  Index GraphData::add_cell(int d, Index s, Index t, std::string id) {
    src[d].push_back(s);
    tgt[d].push_back(t);
    if (d < n) {
      idn[d].push_back(undefined);
    }
    if (!id.empty()) {
      if (ids.size() < static_cast<std::size_t>(n + 2)) {
        ids.resize(n + 2);
      }
      auto& v = ids[d + 1];
      v.resize(src[d].size() - 1);
      v.push_back(std::move(id));
    }
    return static_cast<Index>(src[d].size() - 1);
  }

  Index GraphData::count(int d) const {
    if (d == -1) {
      return tail;
    }
    return static_cast<Index>(src[d].size());
  }

  std::string default_id(int dim, Index i) {
    static constexpr char const* prefix[] = {"t", "x", "f", "u", "m"};
    if (dim + 1 < 5) {
      return prefix[dim + 1] + std::to_string(i);
    }
    return "c" + std::to_string(dim) + "_" + std::to_string(i);
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string cell_name(int dim, Index i) {
      return "(" + std::to_string(dim) + "," + std::to_string(i) + ")";
    }

    std::string join_violations(std::vector<Violation> const& v) {
      std::string out;
      for (auto const& x : v) {
        if (!out.empty()) {
          out += "; ";
        }
        out += std::string(to_string(x.kind)) + " at "
               + cell_name(x.cell.dim, x.cell.index) + ": " + x.message;
      }
      return out;
    }
  }  // namespace

  GraphValidationError::GraphValidationError(std::vector<Violation> v)
      : Error(v.empty() ? ErrorKind::schema_error : v.front().kind,
              join_violations(v)),
        _violations(std::move(v)) {}

  std::vector<Violation> check_graph(GraphData const& d) {
    std::vector<Violation> out;
    auto fail = [&out](ErrorKind k, int dim, Index i, std::string msg) {
      out.push_back({k, CellId{dim, i}, std::move(msg)});
    };

    if (d.n < 1) {
      fail(ErrorKind::bad_level, -1, 0, "truncation level n must be >= 1");
      return out;
    }
    if (d.tail < 1 || d.tail > 2) {
      fail(ErrorKind::bad_tail_size,
           -1,
           0,
           "the tail must hold 1 or 2 cells, found " + std::to_string(d.tail));
      return out;
    }
    auto const dims = static_cast<std::size_t>(d.n + 1);
    if (d.src.size() != dims || d.tgt.size() != dims
        || d.idn.size() != dims - 1) {
      fail(ErrorKind::index_out_of_range,
           -1,
           0,
           "expected source/target maps for dimensions 0.." + std::to_string(d.n)
               + " and identities for 0.." + std::to_string(d.n - 1));
      return out;
    }

    // Sizes and ranges; dimensions with broken shape are skipped afterwards.
    std::vector<bool> shape_ok(dims, true);
    for (int k = 0; k <= d.n; ++k) {
      Index const m = d.count(k);
      if (d.tgt[k].size() != m) {
        fail(ErrorKind::index_out_of_range,
             k,
             0,
             "source and target maps differ in length");
        shape_ok[k] = false;
        continue;
      }
      if (k < d.n && d.idn[k].size() != m) {
        fail(ErrorKind::index_out_of_range,
             k,
             0,
             "identity map does not cover every cell");
        shape_ok[k] = false;
        continue;
      }
      Index const below = d.count(k - 1);
      for (Index i = 0; i < m; ++i) {
        if (d.src[k][i] >= below || d.tgt[k][i] >= below) {
          fail(ErrorKind::index_out_of_range,
               k,
               i,
               "boundary refers to a missing " + std::to_string(k - 1)
                   + "-cell");
          shape_ok[k] = false;
        }
      }
    }
    for (int k = 0; k < d.n; ++k) {
      if (!shape_ok[k] || d.tgt[k + 1].size() != d.count(k + 1)) {
        continue;
      }
      Index const above = d.count(k + 1);
      for (Index i = 0; i < d.count(k); ++i) {
        if (d.idn[k][i] >= above) {
          fail(ErrorKind::index_out_of_range,
               k,
               i,
               "identity refers to a missing " + std::to_string(k + 1)
                   + "-cell");
          shape_ok[k] = false;
        }
      }
    }
    if (!d.ids.empty()) {
      if (d.ids.size() != dims + 1) {
        fail(ErrorKind::schema_error, -1, 0, "ids must cover dimensions -1..n");
      } else {
        std::set<std::string> seen;
        for (int k = -1; k <= d.n; ++k) {
          if (d.ids[k + 1].empty()) {
            continue;  // defaults are filled in by validate
          }
          if (d.ids[k + 1].size() != d.count(k)) {
            fail(ErrorKind::schema_error, k, 0, "ids do not cover every cell");
            continue;
          }
          for (Index i = 0; i < d.count(k); ++i) {
            auto const& s = d.ids[k + 1][i];
            if (s.empty() || !seen.insert(s).second) {
              fail(ErrorKind::schema_error,
                   k,
                   i,
                   "cell id '" + s + "' is empty or not unique");
            }
          }
        }
      }
    }
    if (!out.empty()) {
      return out;
    }

    // All 0-cells share one type.
    for (Index i = 1; i < d.count(0); ++i) {
      if (d.src[0][i] != d.src[0][0] || d.tgt[0][i] != d.tgt[0][0]) {
        fail(ErrorKind::zero_type_violation,
             0,
             i,
             "0-cell type differs from that of the first 0-cell");
      }
    }
    // Section law.
    for (int k = 0; k < d.n; ++k) {
      for (Index x = 0; x < d.count(k); ++x) {
        Index const e = d.idn[k][x];
        if (d.src[k + 1][e] != x || d.tgt[k + 1][e] != x) {
          fail(ErrorKind::section_violation,
               k,
               x,
               "identity cell does not have type (x, x)");
        }
      }
    }
    // Globularity: both boundaries of a cell have equal type.
    for (int k = 2; k <= d.n; ++k) {
      for (Index z = 0; z < d.count(k); ++z) {
        Index const a = d.src[k][z], b = d.tgt[k][z];
        if (d.src[k - 1][a] != d.src[k - 1][b]
            || d.tgt[k - 1][a] != d.tgt[k - 1][b]) {
          fail(ErrorKind::globularity_violation,
               k,
               z,
               "source and target have different types");
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // NGraph
  ////////////////////////////////////////////////////////////////////////

  NGraph NGraph::validate(GraphData data) {
    auto v = check_graph(data);
    if (!v.empty()) {
      throw GraphValidationError(std::move(v));
    }
    auto const dims = static_cast<std::size_t>(data.n + 2);
    if (data.ids.empty()) {
      data.ids.resize(dims);
    }
    for (int k = -1; k <= data.n; ++k) {
      auto& ids = data.ids[k + 1];
      if (ids.empty()) {
        for (Index i = 0; i < data.count(k); ++i) {
          ids.push_back(default_id(k, i));
        }
      }
    }
    data.labels.resize(dims);
    for (int k = -1; k <= data.n; ++k) {
      data.labels[k + 1].resize(data.count(k));
    }
    // Default ids may collide with user ids.
    auto v2 = check_graph(data);
    if (!v2.empty()) {
      throw GraphValidationError(std::move(v2));
    }
    return NGraph(std::move(data));
  }

  NGraph::NGraph(GraphData data) : _data(std::move(data)) {
    int const n = _data.n;
    _hom.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      for (Index z = 0; z < count(k); ++z) {
        _hom[k][{src(k, z), tgt(k, z)}].push_back(z);
      }
    }
    _identity_of.resize(n + 1);
    for (int k = 1; k <= n; ++k) {
      _identity_of[k].assign(count(k), undefined);
      for (Index x = 0; x < count(k - 1); ++x) {
        _identity_of[k][idn(k - 1, x)] = x;
      }
    }
    for (int k = -1; k <= n; ++k) {
      for (Index i = 0; i < count(k); ++i) {
        _by_id.emplace(_data.ids[k + 1][i], CellId{k, i});
      }
    }
  }

  Index NGraph::count(int dim) const {
    if (dim < -1 || dim > _data.n) {
      return 0;
    }
    return _data.count(dim);
  }

  Index NGraph::identity_of(int dim, Index i) const {
    if (dim < 1) {
      return undefined;
    }
    return _identity_of[dim][i];
  }

  std::span<Index const> NGraph::hom(int level, Index x, Index y) const {
    if (level < -1 || level >= _data.n) {
      return {};
    }
    auto const& m  = _hom[level + 1];
    auto        it = m.find({x, y});
    if (it == m.end()) {
      return {};
    }
    return it->second;
  }

  std::string NGraph::label(CellId c) const {
    return _data.labels[c.dim + 1][c.index];
  }

  std::optional<CellId> NGraph::find(std::string const& id) const {
    auto it = _by_id.find(id);
    if (it == _by_id.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  StructureTail NGraph::tail() const {
    StructureTail t;
    t.minus_one_count = _data.tail;
    if (count(0) > 0) {
      t.zero_type = std::make_pair(src(0, 0), tgt(0, 0));
    } else if (_data.tail == 1) {
      t.zero_type = std::make_pair(Index(0), Index(0));
    }
    return t;
  }

  NGraph validate_graph(GraphData data) {
    return NGraph::validate(std::move(data));
  }

  ////////////////////////////////////////////////////////////////////////
  // Queries
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_cell(NGraph const& g, CellId c) {
      if (c.dim < -1 || c.dim > g.n() || c.index >= g.count(c.dim)) {
        throw Error(ErrorKind::index_out_of_range,
                    "no cell " + cell_name(c.dim, c.index));
      }
    }
  }  // namespace

  HomSet hom_set(NGraph const& g, CellId x, CellId y) {
    require_cell(g, x);
    require_cell(g, y);
    if (x.dim != y.dim) {
      throw Error(ErrorKind::dimension_mismatch,
                  "hom_set of cells of dimensions " + std::to_string(x.dim)
                      + " and " + std::to_string(y.dim));
    }
    if (x.dim >= g.n()) {
      throw Error(ErrorKind::bad_level,
                  "hom_set needs cells of dimension below n");
    }
    auto m = g.hom(x.dim, x.index, y.index);
    return HomSet{x.dim, x, y, {m.begin(), m.end()}};
  }

  std::pair<CellId, CellId> cell_type(NGraph const& g, CellId z) {
    require_cell(g, z);
    if (z.dim < 0) {
      throw Error(ErrorKind::bad_level, "(-1)-cells have no type");
    }
    return {CellId{z.dim - 1, g.src(z.dim, z.index)},
            CellId{z.dim - 1, g.tgt(z.dim, z.index)}};
  }

  Index iterated_boundary(NGraph const& g, int dim, Index z, int j, Side side) {
    if (j < -1 || j >= dim) {
      throw Error(ErrorKind::bad_level,
                  "boundary level " + std::to_string(j)
                      + " is not below dimension " + std::to_string(dim));
    }
    for (int k = dim; k > j; --k) {
      z = g.boundary(k, z, side);
    }
    return z;
  }

  CellId iterated_boundary(NGraph const& g, CellId z, int j, Side side) {
    require_cell(g, z);
    return {j, iterated_boundary(g, z.dim, z.index, j, side)};
  }

  bool is_skeletal(NGraph const& g) {
    for (int i = 0; i < g.n(); ++i) {
      Index const m = g.count(i);
      for (Index x = 0; x < m; ++x) {
        for (Index y = 0; y < m; ++y) {
          if (g.src(i, x) == g.src(i, y) && g.tgt(i, x) == g.tgt(i, y)
              && g.hom(i, x, y).size() != 1) {
            return false;
          }
        }
      }
    }
    return true;
  }

  NGraph opposite(NGraph const& g, int i) {
    if (i < 1 || i > g.n()) {
      throw Error(ErrorKind::bad_level,
                  "opposite needs 1 <= i <= n, got " + std::to_string(i));
    }
    GraphData d = g.data();
    std::swap(d.src[i], d.tgt[i]);
    return NGraph::validate(std::move(d));
  }

  bool is_monoidal_carrier(NGraph const& g) {
    return g.count(-1) == 1;
  }

  HomGraph hom_graph(NGraph const& g, CellId x, CellId y) {
    require_cell(g, x);
    require_cell(g, y);
    if (x.dim != y.dim) {
      throw Error(ErrorKind::dimension_mismatch,
                  "hom_graph of cells of different dimensions");
    }
    int const i = x.dim;
    if (i < 0 || i > g.n() - 2) {
      throw Error(ErrorKind::dimension_too_high,
                  "hom_graph needs 0 <= dim(x) <= n - 2");
    }
    int const  top  = g.n() - i - 1;
    bool const loop = x.index == y.index;

    GraphData d = GraphData::empty(top, loop ? 1 : 2);
    d.ids.resize(top + 2);
    d.labels.resize(top + 2);
    std::vector<std::vector<Index>> embedding(top + 2);
    embedding[0] = loop ? std::vector<Index>{x.index}
                           : std::vector<Index>{x.index, y.index};
    for (Index e : embedding[0]) {
      d.ids[0].push_back(g.id(i, e));
      d.labels[0].push_back(g.label({i, e}));
    }

    // reindex[k] : original index -> hom-graph index, for hom-graph dim k
    std::vector<std::vector<Index>> reindex(top + 1);
    for (int k = 0; k <= top; ++k) {
      int const D = i + 1 + k;
      reindex[k].assign(g.count(D), undefined);
      for (Index z = 0; z < g.count(D); ++z) {
        if (iterated_boundary(g, D, z, i, Side::source) != x.index
            || iterated_boundary(g, D, z, i, Side::target) != y.index) {
          continue;
        }
        Index s, t;
        if (k == 0) {
          s = 0;
          t = loop ? 0 : 1;
        } else {
          s = reindex[k - 1][g.src(D, z)];
          t = reindex[k - 1][g.tgt(D, z)];
        }
        reindex[k][z] = d.add_cell(k, s, t);
        embedding[k + 1].push_back(z);
        d.ids[k + 1].push_back(g.id(D, z));
        d.labels[k + 1].push_back(g.label({D, z}));
      }
    }
    for (int k = 0; k < top; ++k) {
      int const D = i + 1 + k;
      for (Index c = 0; c < d.count(k); ++c) {
        d.idn[k][c] = reindex[k + 1][g.idn(D, embedding[k + 1][c])];
      }
    }
    return HomGraph{NGraph::validate(std::move(d)), std::move(embedding)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Automorphisms
  ////////////////////////////////////////////////////////////////////////

  Automorphism identity_automorphism(NGraph const& g) {
    Automorphism a;
    for (int k = -1; k <= g.n(); ++k) {
      std::vector<Index> m(g.count(k));
      for (Index i = 0; i < m.size(); ++i) {
        m[i] = i;
      }
      a.maps.push_back(std::move(m));
    }
    return a;
  }

  Automorphism compose(Automorphism const& first, Automorphism const& second) {
    Automorphism r = first;
    for (std::size_t k = 0; k < r.maps.size(); ++k) {
      for (auto& v : r.maps[k]) {
        v = second.maps[k][v];
      }
    }
    return r;
  }

  Automorphism inverse(Automorphism const& a) {
    Automorphism r = a;
    for (std::size_t k = 0; k < r.maps.size(); ++k) {
      for (Index i = 0; i < a.maps[k].size(); ++i) {
        r.maps[k][a.maps[k][i]] = i;
      }
    }
    return r;
  }

  bool is_automorphism(NGraph const& g, Automorphism const& a) {
    if (a.maps.size() != static_cast<std::size_t>(g.n() + 2)) {
      return false;
    }
    for (int k = -1; k <= g.n(); ++k) {
      auto const& m = a.maps[k + 1];
      if (m.size() != g.count(k)) {
        return false;
      }
      std::vector<bool> hit(m.size(), false);
      for (Index v : m) {
        if (v >= m.size() || hit[v]) {
          return false;
        }
        hit[v] = true;
      }
    }
    for (Index i = 0; i < g.count(-1); ++i) {
      if (a(-1, i) != i) {
        return false;
      }
    }
    for (int k = 0; k <= g.n(); ++k) {
      for (Index z = 0; z < g.count(k); ++z) {
        if (a(k - 1, g.src(k, z)) != g.src(k, a(k, z))
            || a(k - 1, g.tgt(k, z)) != g.tgt(k, a(k, z))) {
          return false;
        }
        if (k < g.n() && a(k + 1, g.idn(k, z)) != g.idn(k, a(k, z))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    struct AutSearch {
      NGraph const&              g;
      std::size_t                max_count;
      Automorphism               current;
      std::vector<std::vector<bool>> used;
      std::vector<Automorphism>  out;

      void run(int k, Index z) {
        if (k > g.n()) {
          if (out.size() == max_count) {
            throw Error(ErrorKind::space_too_large,
                        "more than " + std::to_string(max_count)
                            + " automorphisms");
          }
          out.push_back(current);
          return;
        }
        if (z == g.count(k)) {
          run(k + 1, 0);
          return;
        }
        Index const s = current(k - 1, g.src(k, z));
        Index const t = current(k - 1, g.tgt(k, z));
        Index const x = g.identity_of(k, z);
        auto        place = [&](Index w) {
          current.maps[k + 1][z] = w;
          used[k + 1][w]         = true;
          run(k, z + 1);
          used[k + 1][w] = false;
        };
        if (x != undefined) {
          // identities go to identities
          place(g.idn(k - 1, current(k - 1, x)));
          return;
        }
        for (Index w : g.hom(k - 1, s, t)) {
          if (!used[k + 1][w] && !g.is_identity(k, w)) {
            place(w);
          }
        }
      }
    };
  }  // namespace

  std::vector<Automorphism> automorphisms(NGraph const& g,
                                          std::size_t max_count) {
    AutSearch s{g, max_count, identity_automorphism(g), {}, {}};
    for (auto const& m : s.current.maps) {
      s.used.emplace_back(m.size(), false);
    }
    s.run(0, 0);
    return std::move(s.out);
  }

}  // namespace ncat
