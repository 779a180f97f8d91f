#include "ncat/composition.hpp"

#include <algorithm>
#include <sstream>

namespace ncat {

  ////////////////////////////////////////////////////////////////////////
  // Flags
  ////////////////////////////////////////////////////////////////////////

  AxiomFlags parse_flags(std::string_view csv) {
    AxiomFlags        f;
    std::stringstream ss{std::string(csv)};
    std::string       tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      if (tok.empty() || tok == "partial") {
        continue;
      } else if (tok == "global") {
        f.global = true;
      } else if (tok == "unital") {
        f.unital = true;
      } else if (tok == "associative") {
        f.associative = true;
      } else if (tok == "interchange") {
        f.interchange = true;
      } else if (tok == "groupoid") {
        f.groupoid = true;
      } else {
        throw Error(ErrorKind::schema_error, "unknown axiom flag '" + tok + "'");
      }
    }
    return f;
  }

  std::string to_string(AxiomFlags const& f) {
    std::string out;
    auto        add = [&out](bool on, char const* name) {
      if (on) {
        out += out.empty() ? "" : ",";
        out += name;
      }
    };
    add(f.global, "global");
    add(f.unital, "unital");
    add(f.associative, "associative");
    add(f.interchange, "interchange");
    add(f.groupoid, "groupoid");
    return out.empty() ? "partial" : out;
  }

  std::string_view to_string(TableKind k) noexcept {
    return k == TableKind::vertical ? "vertical" : "horizontal";
  }

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  CompTable::CompTable(NGraph const& g, TableKind kind, int level)
      : _kind(kind), _level(level), _m(0) {
    int const dim = cell_dim();
    if (level < -1 || dim > g.n() || (kind == TableKind::horizontal && level < 0)) {
      throw Error(ErrorKind::bad_level,
                  std::string(to_string(kind)) + " table at level "
                      + std::to_string(level) + " does not fit an "
                      + std::to_string(g.n()) + "-graph");
    }
    _m = g.count(dim);
    _v.assign(static_cast<std::size_t>(_m) * _m, undefined);
  }

  bool composable(NGraph const& g, TableKind kind, int level, Index a, Index b) {
    if (kind == TableKind::vertical) {
      return g.tgt(level + 1, a) == g.src(level + 1, b);
    }
    return iterated_boundary(g, level + 2, a, level, Side::target)
           == iterated_boundary(g, level + 2, b, level, Side::source);
  }

  void CompTable::set(NGraph const& g, Index a, Index b, Index value) {
    if (a >= _m || b >= _m) {
      throw Error(ErrorKind::index_out_of_range, "table key out of range");
    }
    if (!composable(g, _kind, _level, a, b)) {
      throw Error(ErrorKind::not_composable,
                  g.id(cell_dim(), a) + " and " + g.id(cell_dim(), b)
                      + " do not meet along level " + std::to_string(_level));
    }
    set_unchecked(a, b, value);
  }

  std::vector<std::array<Index, 3>> CompTable::entries() const {
    std::vector<std::array<Index, 3>> out;
    for (Index a = 0; a < _m; ++a) {
      for (Index b = 0; b < _m; ++b) {
        if (defined(a, b)) {
          out.push_back({a, b, get(a, b)});
        }
      }
    }
    return out;
  }

  std::size_t CompTable::defined_count() const {
    return std::count_if(
        _v.begin(), _v.end(), [](Index v) { return v != undefined; });
  }

  CompTable& CategoryStructure::vertical(int level) {
    if (level == -1 && !is_monoidal_carrier(*graph)) {
      throw Error(ErrorKind::level_unavailable,
                  "a level -1 table needs a single (-1)-cell");
    }
    auto it = vtables.find(level);
    if (it == vtables.end()) {
      it = vtables.emplace(level, CompTable(*graph, TableKind::vertical, level))
               .first;
    }
    return it->second;
  }

  CompTable& CategoryStructure::horizontal(int level) {
    auto it = htables.find(level);
    if (it == htables.end()) {
      it = htables
               .emplace(level, CompTable(*graph, TableKind::horizontal, level))
               .first;
    }
    return it->second;
  }

  CompTable const* CategoryStructure::find_vertical(int level) const {
    auto it = vtables.find(level);
    return it == vtables.end() ? nullptr : &it->second;
  }

  CompTable const* CategoryStructure::find_horizontal(int level) const {
    auto it = htables.find(level);
    return it == htables.end() ? nullptr : &it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Checkers
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string name(NGraph const& g, int dim, Index i) {
      if (i == undefined) {
        return "undefined";
      }
      if (i >= g.count(dim)) {
        return "#" + std::to_string(i);
      }
      return g.id(dim, i);
    }

    // Successor lists: succ[a] = every b with (a, b) composable.
    std::vector<std::vector<Index>> successors(NGraph const&    g,
                                               CompTable const& t) {
      std::vector<std::vector<Index>> succ(t.size());
      for (Index a = 0; a < t.size(); ++a) {
        for (Index b = 0; b < t.size(); ++b) {
          if (composable(g, t.kind(), t.level(), a, b)) {
            succ[a].push_back(b);
          }
        }
      }
      return succ;
    }

    CompTable const& require_vertical(CategoryStructure const& s, int level) {
      auto const* t = s.find_vertical(level);
      if (t == nullptr) {
        throw Error(ErrorKind::no_table_at_level,
                    "no vertical table at level " + std::to_string(level));
      }
      return *t;
    }

    void check_vertical_typing(NGraph const&    g,
                               CompTable const& t,
                               AxiomResult&     r) {
      int const dim = t.cell_dim();
      for (auto const& [a, b, d] : t.entries()) {
        if (d >= g.count(dim)) {
          r.counterexamples.push_back({{name(g, dim, a), name(g, dim, b)},
                                       "a " + std::to_string(dim) + "-cell",
                                       name(g, dim, d),
                                       "value out of range"});
          continue;
        }
        Index const xs = g.src(dim, a), zt = g.tgt(dim, b);
        if (g.src(dim, d) != xs || g.tgt(dim, d) != zt) {
          r.counterexamples.push_back(
              {{name(g, dim, a), name(g, dim, b), name(g, dim, d)},
               name(g, dim - 1, xs) + " -> " + name(g, dim - 1, zt),
               name(g, dim - 1, g.src(dim, d)) + " -> "
                   + name(g, dim - 1, g.tgt(dim, d)),
               "composite has the wrong type"});
        }
      }
    }

    void check_horizontal_typing(CategoryStructure const& s,
                                 CompTable const&         t,
                                 AxiomResult&             r) {
      NGraph const& g   = *s.graph;
      int const     dim = t.cell_dim();
      int const     j   = t.level();
      auto const*   v   = s.find_vertical(j);
      for (auto const& [a, b, d] : t.entries()) {
        std::vector<std::string> cells{
            name(g, dim, a), name(g, dim, b), name(g, dim, d)};
        if (d >= g.count(dim)) {
          r.counterexamples.push_back(
              {cells, "a " + std::to_string(dim) + "-cell", cells[2],
               "value out of range"});
          continue;
        }
        Index const es = v ? v->get(g.src(dim, a), g.src(dim, b)) : undefined;
        Index const et = v ? v->get(g.tgt(dim, a), g.tgt(dim, b)) : undefined;
        if (es == undefined || et == undefined) {
          r.counterexamples.push_back(
              {cells, "", "", "untypeable: boundary composite undefined"});
          continue;
        }
        if (g.src(dim, d) != es || g.tgt(dim, d) != et) {
          r.counterexamples.push_back(
              {cells,
               name(g, dim - 1, es) + " => " + name(g, dim - 1, et),
               name(g, dim - 1, g.src(dim, d)) + " => "
                   + name(g, dim - 1, g.tgt(dim, d)),
               "horizontal composite has the wrong type"});
          continue;
        }
        if (iterated_boundary(g, dim, d, j, Side::source)
                != iterated_boundary(g, dim, a, j, Side::source)
            || iterated_boundary(g, dim, d, j, Side::target)
                   != iterated_boundary(g, dim, b, j, Side::target)) {
          r.counterexamples.push_back(
              {cells, "", "", "horizontal composite has the wrong ends"});
        }
      }
    }

    void check_table_global(NGraph const&    g,
                            CompTable const& t,
                            AxiomResult&     r) {
      int const dim = t.cell_dim();
      for (Index a = 0; a < t.size(); ++a) {
        for (Index b = 0; b < t.size(); ++b) {
          if (!t.defined(a, b) && composable(g, t.kind(), t.level(), a, b)) {
            r.counterexamples.push_back({{name(g, dim, a), name(g, dim, b)},
                                         "",
                                         "undefined",
                                         "composable pair has no composite"});
          }
        }
      }
    }

  }  // namespace

  AxiomReport check_typing(CategoryStructure const& s) {
    AxiomReport   rep;
    NGraph const& g = *s.graph;
    for (auto const& [level, t] : s.vtables) {
      AxiomResult r("typing", level);
      check_vertical_typing(g, t, r);
      rep.add(std::move(r.settle()));
    }
    for (auto const& [level, t] : s.htables) {
      AxiomResult r("typing-horizontal", level);
      check_horizontal_typing(s, t, r);
      rep.add(std::move(r.settle()));
    }
    if (rep.results.empty()) {
      AxiomResult r("typing");
      r.note = "no tables";
      rep.add(std::move(r));
    }
    return rep;
  }

  AxiomReport check_global(CategoryStructure const& s, int level) {
    auto const& t = require_vertical(s, level);
    AxiomResult r("global", level);
    check_table_global(*s.graph, t, r);
    return AxiomReport{}.add(std::move(r.settle()));
  }

  AxiomReport check_associativity(CategoryStructure const& s, int level) {
    auto const&   t   = require_vertical(s, level);
    NGraph const& g   = *s.graph;
    int const     dim = t.cell_dim();
    AxiomResult   r("associativity", level);
    auto const    succ = successors(g, t);
    auto lookup = [&](Index a, Index b) -> Index {
      if (a == undefined || b == undefined || a >= t.size() || b >= t.size()
          || !composable(g, t.kind(), t.level(), a, b)) {
        return undefined;
      }
      return t.get(a, b);
    };
    for (Index a = 0; a < t.size(); ++a) {
      for (Index b : succ[a]) {
        Index const ab = t.get(a, b);
        for (Index c : succ[b]) {
          Index const bc  = t.get(b, c);
          Index const lhs = lookup(ab, c);
          Index const rhs = lookup(a, bc);
          if (lhs == undefined && rhs == undefined) {
            continue;
          }
          Counterexample ce{{name(g, dim, a), name(g, dim, b), name(g, dim, c)},
                            name(g, dim, lhs),
                            name(g, dim, rhs),
                            ""};
          if (lhs == undefined || rhs == undefined) {
            ce.what = "only one bracketing is defined";
            r.asymmetries.push_back(std::move(ce));
          } else if (lhs != rhs) {
            ce.what = "(ab)c != a(bc)";
            r.counterexamples.push_back(std::move(ce));
          }
        }
      }
    }
    return AxiomReport{}.add(std::move(r.settle()));
  }

  AxiomReport check_units(CategoryStructure const& s, int level) {
    auto const&   t = require_vertical(s, level);
    NGraph const& g = *s.graph;
    AxiomResult   r("units", level);
    if (level < 0) {
      r.verdict = Verdict::not_applicable;
      r.note    = "(-1)-cells carry no identity cells";
      return AxiomReport{}.add(std::move(r));
    }
    int const dim = t.cell_dim();
    for (Index a = 0; a < t.size(); ++a) {
      Index const ex = g.idn(level, g.src(dim, a));
      Index const ey = g.idn(level, g.tgt(dim, a));
      for (auto [key_l, key_r, side] : {std::tuple{ex, a, "left"},
                                        std::tuple{a, ey, "right"}}) {
        Index const v = t.get(key_l, key_r);
        if (v == undefined) {
          if (s.flags.global) {
            r.counterexamples.push_back(
                {{name(g, dim, key_l), name(g, dim, key_r)},
                 name(g, dim, a),
                 "undefined",
                 std::string(side) + " unit composite missing"});
          }
        } else if (v != a) {
          r.counterexamples.push_back(
              {{name(g, dim, key_l), name(g, dim, key_r)},
               name(g, dim, a),
               name(g, dim, v),
               std::string(side) + " unit law fails"});
        }
      }
    }
    return AxiomReport{}.add(std::move(r.settle()));
  }

  AxiomReport check_interchange(CategoryStructure const& s, int level) {
    auto const* v = s.find_vertical(level + 1);
    auto const* h = s.find_horizontal(level);
    if (v == nullptr || h == nullptr) {
      throw Error(ErrorKind::missing_tables,
                  "interchange at level " + std::to_string(level)
                      + " needs a vertical table at level "
                      + std::to_string(level + 1)
                      + " and a horizontal table at level "
                      + std::to_string(level));
    }
    NGraph const& g   = *s.graph;
    int const     dim = level + 2;
    AxiomResult   r("interchange", level);
    auto const    vert = v->entries();
    for (auto const& [a1, a2, a12] : vert) {
      for (auto const& [b1, b2, b12] : vert) {
        if (!composable(g, TableKind::horizontal, level, a1, b1)) {
          continue;
        }
        Index const x = h->get(a1, b1);
        Index const y = h->get(a2, b2);
        if (x == undefined || y == undefined
            || !composable(g, TableKind::horizontal, level, a12, b12)) {
          continue;
        }
        Index const lhs = h->get(a12, b12);
        if (lhs == undefined) {
          continue;
        }
        Counterexample ce{{name(g, dim, a1),
                           name(g, dim, a2),
                           name(g, dim, b1),
                           name(g, dim, b2)},
                          name(g, dim, lhs),
                          "",
                          ""};
        if (x >= g.count(dim) || y >= g.count(dim)
            || !composable(g, TableKind::vertical, level + 1, x, y)) {
          ce.what = "h(a1,b1) and h(a2,b2) cannot be composed vertically";
          r.counterexamples.push_back(std::move(ce));
          continue;
        }
        Index const rhs = v->get(x, y);
        ce.actual       = name(g, dim, rhs);
        if (rhs == undefined) {
          ce.what = "only h(v(a1,a2), v(b1,b2)) is defined";
          r.asymmetries.push_back(std::move(ce));
        } else if (rhs != lhs) {
          ce.what = "h(v(a1,a2), v(b1,b2)) != v(h(a1,b1), h(a2,b2))";
          r.counterexamples.push_back(std::move(ce));
        }
      }
    }
    return AxiomReport{}.add(std::move(r.settle()));
  }

  AxiomReport check_groupoid(CategoryStructure const& s, int level) {
    auto const&   t = require_vertical(s, level);
    NGraph const& g = *s.graph;
    AxiomResult   r("groupoid", level);
    if (level < 0) {
      r.verdict = Verdict::not_applicable;
      r.note    = "(-1)-cells carry no identity cells";
      return AxiomReport{}.add(std::move(r));
    }
    if (!check_units(s, level).passed()) {
      throw Error(ErrorKind::units_required,
                  "inverses need the unit law at level " + std::to_string(level));
    }
    int const dim = t.cell_dim();
    for (Index a = 0; a < t.size(); ++a) {
      Index const x = g.src(dim, a), y = g.tgt(dim, a);
      bool        found = false;
      for (Index b : g.hom(level, y, x)) {
        if (t.get(a, b) == g.idn(level, x) && t.get(b, a) == g.idn(level, y)) {
          found = true;
          break;
        }
      }
      if (!found) {
        r.counterexamples.push_back(
            {{name(g, dim, a)}, "", "", "no two-sided inverse"});
      }
    }
    return AxiomReport{}.add(std::move(r.settle()));
  }

  AxiomReport check_cocategory(NGraph const& g, CocompTable const& d) {
    AxiomResult r("cocategory", d.level);
    int const   dim = d.level + 1;
    if (d.level < 0 || dim > g.n()) {
      throw Error(ErrorKind::bad_level,
                  "cooperation at level " + std::to_string(d.level));
    }
    for (auto const& [z, e] : d.entries) {
      std::vector<std::string> cells{name(g, dim, z),
                                     name(g, dim - 1, e.w),
                                     name(g, dim, e.p),
                                     name(g, dim, e.q)};
      if (z >= g.count(dim) || e.w >= g.count(dim - 1) || e.p >= g.count(dim)
          || e.q >= g.count(dim)) {
        r.counterexamples.push_back({cells, "", "", "cell out of range"});
        continue;
      }
      Index const x = g.src(dim, z), y = g.tgt(dim, z);
      if (g.src(dim, e.p) != x || g.tgt(dim, e.p) != e.w) {
        r.counterexamples.push_back(
            {cells,
             name(g, dim - 1, x) + " -> " + name(g, dim - 1, e.w),
             name(g, dim - 1, g.src(dim, e.p)) + " -> "
                 + name(g, dim - 1, g.tgt(dim, e.p)),
             "first factor has the wrong type"});
      }
      if (g.src(dim, e.q) != e.w || g.tgt(dim, e.q) != y) {
        r.counterexamples.push_back(
            {cells,
             name(g, dim - 1, e.w) + " -> " + name(g, dim - 1, y),
             name(g, dim - 1, g.src(dim, e.q)) + " -> "
                 + name(g, dim - 1, g.tgt(dim, e.q)),
             "second factor has the wrong type"});
      }
    }
    return AxiomReport{}.add(std::move(r.settle()));
  }

  Index compose(CategoryStructure const& s, Index a, Index b, int level) {
    auto const&   t = require_vertical(s, level);
    NGraph const& g = *s.graph;
    int const     dim = t.cell_dim();
    if (a >= t.size() || b >= t.size()) {
      throw Error(ErrorKind::index_out_of_range, "compose: no such cell");
    }
    if (!composable(g, TableKind::vertical, level, a, b)) {
      throw Error(ErrorKind::not_composable,
                  g.id(dim, a) + " ; " + g.id(dim, b));
    }
    Index const v = t.get(a, b);
    if (v == undefined) {
      throw Error(ErrorKind::not_defined, g.id(dim, a) + " ; " + g.id(dim, b));
    }
    return v;
  }

  AxiomReport check_category(CategoryStructure const& s) {
    AxiomReport rep = check_typing(s);
    auto const& f   = s.flags;
    for (auto const& [level, t] : s.vtables) {
      if (f.global) {
        rep.append(check_global(s, level));
      }
      if (f.unital) {
        rep.append(check_units(s, level));
      }
      if (f.associative) {
        rep.append(check_associativity(s, level));
      }
      if (f.groupoid) {
        try {
          rep.append(check_groupoid(s, level));
        } catch (Error const& e) {
          if (e.kind() != ErrorKind::units_required) {
            throw;
          }
          AxiomResult r("groupoid", level, Verdict::fail);
          r.counterexamples.push_back({{}, "", "", "unit law fails"});
          r.note = "inverses need the unit law";
          rep.add(std::move(r));
        }
      }
    }
    if (f.global) {
      for (auto const& [level, t] : s.htables) {
        AxiomResult r("global-horizontal", level);
        check_table_global(*s.graph, t, r);
        rep.add(std::move(r.settle()));
      }
    }
    if (f.interchange) {
      if (s.htables.empty()) {
        rep.add(AxiomResult::not_applicable(
            "interchange", std::nullopt, "no horizontal tables"));
      }
      for (auto const& [level, t] : s.htables) {
        if (s.find_vertical(level + 1) == nullptr) {
          rep.add(AxiomResult::not_applicable(
              "interchange",
              level,
              "no vertical table at level " + std::to_string(level + 1)));
        } else {
          rep.append(check_interchange(s, level));
        }
      }
    }
    for (auto const& [level, d] : s.cotables) {
      rep.append(check_cocategory(*s.graph, d));
    }
    return rep;
  }

}  // namespace ncat
