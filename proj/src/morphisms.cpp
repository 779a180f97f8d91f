#include "ncat/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace ncat {

  namespace {

    std::string name(NGraph const& g, int dim, Index i) {
      if (i == undefined) {
        return "undefined";
      }
      if (dim < -1 || dim > g.n() || i >= g.count(dim)) {
        return "#" + std::to_string(i);
      }
      return g.id(dim, i);
    }

    // Composite in s's table of this kind, or `undefined` when the table is
    // missing, the cells are out of range, or the pair does not meet.
    Index lookup(CategoryStructure const& s,
                 TableKind                kind,
                 int                      level,
                 Index                    a,
                 Index                    b) {
      auto const* t = kind == TableKind::vertical ? s.find_vertical(level)
                                                  : s.find_horizontal(level);
      if (t == nullptr || a >= t->size() || b >= t->size()
          || !composable(*s.graph, kind, level, a, b)) {
        return undefined;
      }
      return t->get(a, b);
    }

    void require_same_n(NGraph const& e, NGraph const& f) {
      if (e.n() != f.n()) {
        throw Error(ErrorKind::dimension_mismatch,
                    "domain has n = " + std::to_string(e.n())
                        + ", codomain has n = " + std::to_string(f.n()));
      }
    }

    void require_shape(GraphMorphism const& m) {
      NGraph const& e = *m.domain;
      require_same_n(e, *m.codomain);
      bool ok = m.comps.size() == static_cast<std::size_t>(e.n() + 2);
      for (int d = -1; ok && d <= e.n(); ++d) {
        ok = m.comps[d + 1].size() == e.count(d);
      }
      if (!ok) {
        throw Error(ErrorKind::dimension_mismatch,
                    "morphism components do not match the domain");
      }
    }

    void require_over(GraphMorphism const&     m,
                      CategoryStructure const& cE,
                      CategoryStructure const& cF) {
      if (!(*cE.graph == *m.domain) || !(*cF.graph == *m.codomain)) {
        throw Error(ErrorKind::dimension_mismatch,
                    "structures do not sit over the morphism's endpoints");
      }
    }

    // One result summarizing a whole report.
    AxiomResult fold(std::string axiom, AxiomReport const& rep) {
      AxiomResult r(std::move(axiom));
      for (auto const& x : rep.results) {
        for (auto ce : x.counterexamples) {
          ce.what = x.axiom + ": " + ce.what;
          r.counterexamples.push_back(std::move(ce));
        }
      }
      return r.settle();
    }

    void check_functor_table(GraphMorphism const&     m,
                             CompTable const&         t,
                             CategoryStructure const& cF,
                             AxiomResult&             r) {
      NGraph const& e   = *m.domain;
      NGraph const& f   = *m.codomain;
      int const     dim = t.cell_dim();
      for (auto const& [a, b, d] : t.entries()) {
        if (d >= e.count(dim)) {
          continue;  // a typing failure of cE, not of the functor
        }
        Index const fa = m(dim, a), fb = m(dim, b), fd = m(dim, d);
        Index const v  = lookup(cF, t.kind(), t.level(), fa, fb);
        Counterexample ce{{name(e, dim, a), name(e, dim, b)},
                          name(f, dim, fd),
                          name(f, dim, v),
                          ""};
        if (v == undefined) {
          ce.what = "composite of the images is undefined";
          r.counterexamples.push_back(std::move(ce));
        } else if (v != fd) {
          ce.what = "image of the composite differs";
          r.counterexamples.push_back(std::move(ce));
        }
      }
    }

    // Depth-first search over variables 0..size-1 with candidate lists and
    // a check run once a variable is assigned. Throws space_too_large.
    struct Backtrack {
      std::function<std::vector<Index>(std::size_t)> candidates;
      std::function<bool(std::size_t)>               consistent;
      std::function<void()>                          emit;
      std::function<void(std::size_t, Index)>       assign;
      std::size_t                                    size      = 0;
      std::uint64_t                                  max_nodes = 0;
      std::uint64_t                                  nodes     = 0;

      void run(std::size_t i = 0) {
        if (++nodes > max_nodes) {
          throw Error(ErrorKind::space_too_large,
                      "search exceeded " + std::to_string(max_nodes) + " nodes");
        }
        if (i == size) {
          emit();
          return;
        }
        for (Index v : candidates(i)) {
          assign(i, v);
          if (consistent(i)) {
            run(i + 1);
          }
        }
        assign(i, undefined);
      }
    };

  }  // namespace

  GraphMorphism GraphMorphism::identity(std::shared_ptr<NGraph const> g) {
    GraphMorphism m{g, g, {}};
    for (int d = -1; d <= g->n(); ++d) {
      std::vector<Index> c(g->count(d));
      for (Index i = 0; i < c.size(); ++i) {
        c[i] = i;
      }
      m.comps.push_back(std::move(c));
    }
    return m;
  }

  GraphMorphism compose(GraphMorphism const& first, GraphMorphism const& second) {
    if (!(*first.codomain == *second.domain)) {
      throw Error(ErrorKind::dimension_mismatch,
                  "morphisms do not meet: codomain differs from domain");
    }
    GraphMorphism m{first.domain, second.codomain, first.comps};
    for (std::size_t k = 0; k < m.comps.size(); ++k) {
      for (auto& v : m.comps[k]) {
        v = second.comps[k][v];
      }
    }
    return m;
  }

  AxiomReport check_graph_morphism(GraphMorphism const& m) {
    require_shape(m);
    NGraph const& e = *m.domain;
    NGraph const& f = *m.codomain;
    AxiomResult   r("graph-morphism");
    bool          in_range = true;
    for (int d = -1; d <= e.n(); ++d) {
      for (Index z = 0; z < e.count(d); ++z) {
        if (m(d, z) >= f.count(d)) {
          in_range = false;
          r.counterexamples.push_back({{name(e, d, z)},
                                       "a " + std::to_string(d) + "-cell",
                                       name(f, d, m(d, z)),
                                       "image out of range"});
        }
      }
    }
    if (!in_range) {
      return AxiomReport{}.add(std::move(r.settle()));
    }
    if (e.count(-1) == f.count(-1)) {
      for (Index k = 0; k < e.count(-1); ++k) {
        if (m(-1, k) != k) {
          r.counterexamples.push_back({{name(e, -1, k)},
                                       name(f, -1, k),
                                       name(f, -1, m(-1, k)),
                                       "tail not preserved"});
        }
      }
    }
    for (int d = 0; d <= e.n(); ++d) {
      for (Index z = 0; z < e.count(d); ++z) {
        Index const fz = m(d, z);
        for (Side side : {Side::source, Side::target}) {
          Index const want = m(d - 1, e.boundary(d, z, side));
          Index const got  = f.boundary(d, fz, side);
          if (want != got) {
            r.counterexamples.push_back(
                {{name(e, d, z)},
                 name(f, d - 1, want),
                 name(f, d - 1, got),
                 side == Side::source ? "source square" : "target square"});
          }
        }
        if (d < e.n()) {
          Index const want = f.idn(d, fz);
          Index const got  = m(d + 1, e.idn(d, z));
          if (want != got) {
            r.counterexamples.push_back({{name(e, d, z)},
                                         name(f, d + 1, want),
                                         name(f, d + 1, got),
                                         "identity square"});
          }
        }
      }
    }
    return AxiomReport{}.add(std::move(r.settle()));
  }

  AxiomReport check_contravariant(GraphMorphism const& m, VarianceSpec const& v) {
    if (v.weakened) {
      throw Error(ErrorKind::unsupported,
                  "weakened morphisms carry no coherence condition");
    }
    require_shape(m);
    auto        cod   = m.codomain;
    std::string note;
    for (int i : v.contravariant_levels) {
      if (i < 1 || i > cod->n()) {
        throw Error(ErrorKind::bad_level,
                    "contravariant level " + std::to_string(i));
      }
      cod = std::make_shared<NGraph const>(opposite(*cod, i));
      note += (note.empty() ? "opposite at " : ", ") + std::to_string(i);
    }
    GraphMorphism w{m.domain, cod, m.comps};
    auto          rep = check_graph_morphism(w);
    rep.results.front().note = note;
    return rep;
  }

  AxiomReport check_functor(GraphMorphism const&     m,
                            CategoryStructure const& cE,
                            CategoryStructure const& cF) {
    require_over(m, cE, cF);
    AxiomReport rep = check_graph_morphism(m);
    if (!rep.passed()) {
      rep.add(AxiomResult::not_applicable(
          "functor", std::nullopt, "graph morphism squares fail"));
      return rep;
    }
    for (auto const& [level, t] : cE.vtables) {
      AxiomResult r("functor", level);
      check_functor_table(m, t, cF, r);
      rep.add(std::move(r.settle()));
    }
    for (auto const& [level, t] : cE.htables) {
      AxiomResult r("functor-horizontal", level);
      check_functor_table(m, t, cF, r);
      rep.add(std::move(r.settle()));
    }
    return rep;
  }

  Transformation identity_transformation(GraphMorphism const& f, int dim) {
    Transformation t{f, f, {}};
    auto&          c = t.comps[dim];
    for (Index x = 0; x < f.domain->count(dim); ++x) {
      c.push_back(f.codomain->idn(dim, f(dim, x)));
    }
    return t;
  }

  AxiomReport check_transformation(Transformation const&    tr,
                                   CategoryStructure const& cE,
                                   CategoryStructure const& cF) {
    require_over(tr.f, cE, cF);
    require_over(tr.g, cE, cF);
    NGraph const& e = *cE.graph;
    NGraph const& f = *cF.graph;
    AxiomReport   rep;
    rep.add(fold("functor-source", check_functor(tr.f, cE, cF)));
    rep.add(fold("functor-target", check_functor(tr.g, cE, cF)));
    if (!rep.passed()) {
      return rep;
    }
    for (auto const& [i, t] : tr.comps) {
      if (i < 0 || i >= e.n()) {
        throw Error(ErrorKind::bad_level,
                    "transformation components at dimension " + std::to_string(i));
      }
      if (t.size() != e.count(i)) {
        throw Error(ErrorKind::dimension_mismatch,
                    "one component is needed per " + std::to_string(i) + "-cell");
      }
      AxiomResult typing("component-typing", i);
      for (Index x = 0; x < e.count(i); ++x) {
        Index const fx = tr.f(i, x), gx = tr.g(i, x);
        if (t[x] >= f.count(i + 1) || f.src(i + 1, t[x]) != fx
            || f.tgt(i + 1, t[x]) != gx) {
          typing.counterexamples.push_back(
              {{name(e, i, x), name(f, i + 1, t[x])},
               name(f, i, fx) + " -> " + name(f, i, gx),
               t[x] < f.count(i + 1)
                   ? name(f, i, f.src(i + 1, t[x])) + " -> "
                         + name(f, i, f.tgt(i + 1, t[x]))
                   : "out of range",
               "component-untyped"});
        }
      }
      AxiomResult nat("naturality", i);
      for (Index a = 0; a < e.count(i + 1); ++a) {
        Index const x = e.src(i + 1, a), y = e.tgt(i + 1, a);
        Index const lhs = lookup(cF, TableKind::vertical, i, t[x], tr.g(i + 1, a));
        Index const rhs = lookup(cF, TableKind::vertical, i, tr.f(i + 1, a), t[y]);
        Counterexample ce{{name(e, i + 1, a), name(e, i, x), name(e, i, y)},
                          name(f, i + 1, lhs),
                          name(f, i + 1, rhs),
                          ""};
        if (lhs == undefined || rhs == undefined) {
          ce.what = "naturality-square-undefined";
          nat.counterexamples.push_back(std::move(ce));
        } else if (lhs != rhs) {
          ce.what = "naturality-failed";
          nat.counterexamples.push_back(std::move(ce));
        }
      }
      rep.add(std::move(typing.settle()));
      rep.add(std::move(nat.settle()));
    }
    return rep;
  }

  Modification identity_modification(Transformation const& s, int dim) {
    if (dim < 0 || dim + 2 > s.f.codomain->n()) {
      throw Error(ErrorKind::bad_level,
                  "modification components at dimension " + std::to_string(dim)
                      + " need (i+2)-cells");
    }
    Modification m{s, s, {}};
    auto&        c = m.comps[dim];
    for (Index sx : s.comps.at(dim)) {
      c.push_back(s.f.codomain->idn(dim + 1, sx));
    }
    return m;
  }

  AxiomReport check_modification(Modification const&      md,
                                 CategoryStructure const& cE,
                                 CategoryStructure const& cF) {
    if (!(md.s.f == md.t.f) || !(md.s.g == md.t.g)) {
      throw Error(ErrorKind::dimension_mismatch,
                  "s and t must be transformations between the same functors");
    }
    NGraph const& e = *cE.graph;
    NGraph const& f = *cF.graph;
    auto const&   F = md.s.f;
    auto const&   G = md.s.g;
    AxiomReport   rep;
    rep.add(fold("transformation-s", check_transformation(md.s, cE, cF)));
    rep.add(fold("transformation-t", check_transformation(md.t, cE, cF)));
    for (auto const& [i, mu] : md.comps) {
      if (i < 0 || i + 2 > f.n()) {
        throw Error(ErrorKind::bad_level,
                    "modification components at dimension " + std::to_string(i)
                        + " need (i+2)-cells");
      }
      if (!md.s.comps.contains(i) || !md.t.comps.contains(i)
          || mu.size() != e.count(i)) {
        throw Error(ErrorKind::dimension_mismatch,
                    "modification and transformations disagree at dimension "
                        + std::to_string(i));
      }
      auto const& s = md.s.comps.at(i);
      auto const& t = md.t.comps.at(i);

      AxiomResult typing("modification-typing", i);
      for (Index x = 0; x < e.count(i); ++x) {
        if (mu[x] >= f.count(i + 2) || f.src(i + 2, mu[x]) != s[x]
            || f.tgt(i + 2, mu[x]) != t[x]) {
          typing.counterexamples.push_back(
              {{name(e, i, x), name(f, i + 2, mu[x])},
               name(f, i + 1, s[x]) + " => " + name(f, i + 1, t[x]),
               "",
               "component-untyped"});
        }
      }
      rep.add(std::move(typing.settle()));

      // The (i+2)-cells alpha of the domain, with their endpoints a, b.
      std::vector<std::array<Index, 3>> alphas;  // alpha, a, b
      for (Index al = 0; al < e.count(i + 2); ++al) {
        alphas.push_back({al, e.src(i + 2, al), e.tgt(i + 2, al)});
      }

      AxiomResult               paths("path-equations", i);
      std::set<std::pair<int, Index>> seen;  // (which transformation, cell)
      for (auto const& [al, a, b] : alphas) {
        for (Index c : {a, b}) {
          Index const x = e.src(i + 1, c), y = e.tgt(i + 1, c);
          for (int which = 0; which < 2; ++which) {
            if (!seen.insert({which, c}).second) {
              continue;
            }
            auto const& u   = which == 0 ? s : t;
            Index const lhs = lookup(cF, TableKind::vertical, i, u[x], G(i + 1, c));
            Index const rhs = lookup(cF, TableKind::vertical, i, F(i + 1, c), u[y]);
            if (lhs == undefined || rhs == undefined || lhs != rhs) {
              paths.counterexamples.push_back(
                  {{name(e, i + 1, c), name(e, i, x), name(e, i, y)},
                   name(f, i + 1, lhs),
                   name(f, i + 1, rhs),
                   std::string(which == 0 ? "s" : "t")
                       + (lhs == undefined || rhs == undefined
                              ? ": path undefined"
                              : ": paths differ")});
            }
          }
        }
      }
      rep.add(std::move(paths.settle()));

      if (cF.find_horizontal(i) == nullptr) {
        rep.add(AxiomResult::not_applicable(
            "two-cell-equation",
            i,
            "no horizontal table at level " + std::to_string(i)
                + " to whisker mu with f(alpha) and g(alpha)"));
        continue;
      }
      AxiomResult two("two-cell-equation", i);
      for (auto const& [al, a, b] : alphas) {
        Index const x = e.src(i + 1, a), y = e.tgt(i + 1, a);
        Index const lhs
            = lookup(cF, TableKind::horizontal, i, mu[x], G(i + 2, al));
        Index const rhs
            = lookup(cF, TableKind::horizontal, i, F(i + 2, al), mu[y]);
        if (lhs == undefined || rhs == undefined || lhs != rhs) {
          two.counterexamples.push_back(
              {{name(e, i + 2, al), name(e, i, x), name(e, i, y)},
               name(f, i + 2, lhs),
               name(f, i + 2, rhs),
               lhs == undefined || rhs == undefined
                   ? "whiskered composite undefined"
                   : "(g alpha) o (mu x) != (mu y) o (f alpha)"});
        }
      }
      rep.add(std::move(two.settle()));
    }
    return rep;
  }

  std::vector<GraphMorphism> enumerate_functors(CategoryStructure const& cE,
                                                CategoryStructure const& cF,
                                                std::uint64_t max_nodes) {
    NGraph const& e = *cE.graph;
    NGraph const& f = *cF.graph;
    require_same_n(e, f);
    GraphMorphism m{cE.graph, cF.graph, {}};
    m.comps.resize(e.n() + 2);
    for (int d = -1; d <= e.n(); ++d) {
      m.comps[d + 1].assign(e.count(d), undefined);
    }

    // The tail map is fixed by the zero types (or is the identity).
    auto const te = e.tail(), tf = f.tail();
    for (Index k = 0; k < e.count(-1); ++k) {
      m.comps[0][k] = e.count(-1) == f.count(-1) ? k : 0;
    }
    if (e.count(-1) != f.count(-1) && te.zero_type && tf.zero_type) {
      m.comps[0][te.zero_type->first]  = tf.zero_type->first;
      m.comps[0][te.zero_type->second] = tf.zero_type->second;
    }

    std::vector<std::pair<int, Index>> vars;
    std::map<std::pair<int, Index>, std::size_t> var_of;
    for (int d = 0; d <= e.n(); ++d) {
      for (Index z = 0; z < e.count(d); ++z) {
        var_of[{d, z}] = vars.size();
        vars.emplace_back(d, z);
      }
    }
    // Functor squares, each attached to its last variable.
    struct Square {
      TableKind kind;
      int       level;
      Index     a, b, v;
    };
    std::vector<std::vector<Square>> checks(vars.size());
    auto attach = [&](CompTable const& t) {
      int const dim = t.cell_dim();
      for (auto const& [a, b, v] : t.entries()) {
        if (v >= e.count(dim)) {
          continue;
        }
        std::size_t last = std::max({var_of[{dim, a}], var_of[{dim, b}],
                                     var_of[{dim, v}]});
        checks[last].push_back({t.kind(), t.level(), a, b, v});
      }
    };
    for (auto const& [l, t] : cE.vtables) {
      attach(t);
    }
    for (auto const& [l, t] : cE.htables) {
      attach(t);
    }

    std::vector<GraphMorphism> out;
    Backtrack                  bt;
    bt.size      = vars.size();
    bt.max_nodes = max_nodes;
    bt.assign    = [&](std::size_t i, Index v) {
      m.comps[vars[i].first + 1][vars[i].second] = v;
    };
    bt.candidates = [&](std::size_t i) {
      auto const [d, z] = vars[i];
      std::vector<Index> c;
      if (d >= 1 && e.is_identity(d, z)) {
        c.push_back(f.idn(d - 1, m(d - 1, e.identity_of(d, z))));
        return c;
      }
      Index const s = m(d - 1, e.src(d, z)), t = m(d - 1, e.tgt(d, z));
      if (d == 0) {
        for (Index x = 0; x < f.count(0); ++x) {
          if (f.src(0, x) == s && f.tgt(0, x) == t) {
            c.push_back(x);
          }
        }
      } else {
        auto h = f.hom(d - 1, s, t);
        c.assign(h.begin(), h.end());
      }
      return c;
    };
    bt.consistent = [&](std::size_t i) {
      for (auto const& sq : checks[i]) {
        int const   cd = sq.kind == TableKind::vertical ? sq.level + 1 : sq.level + 2;
        Index const v  = lookup(cF, sq.kind, sq.level, m(cd, sq.a), m(cd, sq.b));
        if (v == undefined || v != m(cd, sq.v)) {
          return false;
        }
      }
      return true;
    };
    bt.emit = [&]() {
      if (check_functor(m, cE, cF).passed()) {
        out.push_back(m);
      }
    };
    bt.run();
    return out;
  }

  std::vector<Transformation> enumerate_transformations(GraphMorphism const&     f,
                                                        GraphMorphism const&     g,
                                                        CategoryStructure const& cE,
                                                        CategoryStructure const& cF,
                                                        std::set<int> const&     dims,
                                                        std::uint64_t max_nodes) {
    std::vector<Transformation> out;
    if (!check_functor(f, cE, cF).passed() || !check_functor(g, cE, cF).passed()) {
      return out;
    }
    NGraph const&  e = *cE.graph;
    NGraph const&  F = *cF.graph;
    Transformation tr{f, g, {}};
    std::vector<std::pair<int, Index>> vars;
    for (int i : dims) {
      if (i < 0 || i >= e.n()) {
        throw Error(ErrorKind::bad_level,
                    "transformation components at dimension " + std::to_string(i));
      }
      tr.comps[i].assign(e.count(i), undefined);
      for (Index x = 0; x < e.count(i); ++x) {
        vars.emplace_back(i, x);
      }
    }
    // Naturality of a : x -> y is checked once both tx and ty are set;
    // variables of one dimension are numbered in cell order.
    std::map<std::pair<int, Index>, std::size_t> var_of;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      var_of[vars[k]] = k;
    }
    std::vector<std::vector<std::pair<int, Index>>> checks(vars.size());
    for (int i : dims) {
      for (Index a = 0; a < e.count(i + 1); ++a) {
        std::size_t const last = std::max(var_of[{i, e.src(i + 1, a)}],
                                          var_of[{i, e.tgt(i + 1, a)}]);
        checks[last].emplace_back(i, a);
      }
    }
    Backtrack bt;
    bt.size      = vars.size();
    bt.max_nodes = max_nodes;
    bt.assign    = [&](std::size_t k, Index v) {
      tr.comps[vars[k].first][vars[k].second] = v;
    };
    bt.candidates = [&](std::size_t k) {
      auto const [i, x] = vars[k];
      auto h            = F.hom(i, f(i, x), g(i, x));
      return std::vector<Index>(h.begin(), h.end());
    };
    bt.consistent = [&](std::size_t k) {
      for (auto const& [i, a] : checks[k]) {
        auto const& t   = tr.comps[i];
        Index const lhs = lookup(cF, TableKind::vertical, i,
                                 t[e.src(i + 1, a)], g(i + 1, a));
        Index const rhs = lookup(cF, TableKind::vertical, i,
                                 f(i + 1, a), t[e.tgt(i + 1, a)]);
        if (lhs == undefined || lhs != rhs) {
          return false;
        }
      }
      return true;
    };
    bt.emit = [&]() {
      if (check_transformation(tr, cE, cF).passed()) {
        out.push_back(tr);
      }
    };
    bt.run();
    return out;
  }

  CatOfCats build_cat_of_cats(std::vector<CategoryStructure> const& cats,
                              int                                   depth,
                              std::vector<std::string> const&       names) {
    if (depth != 2 && depth != 3) {
      throw Error(ErrorKind::bad_level, "depth must be 2 or 3");
    }
    for (auto const& c : cats) {
      if (c.graph->n() != 1) {
        throw Error(ErrorKind::unsupported,
                    "only 1-categories can be the objects");
      }
    }
    std::size_t const k = cats.size();
    CatOfCats         out{CategoryStructure(nullptr), {}, {}, {}, {}};

    GraphData d = GraphData::empty(depth);
    d.ids.resize(depth + 2);
    d.ids[0] = {"t"};
    for (std::size_t i = 0; i < k; ++i) {
      d.add_cell(0, 0, 0);
      d.ids[1].push_back(i < names.size() ? names[i] : "C" + std::to_string(i));
    }

    // 1-cells
    using FunctorKey = std::tuple<std::size_t, std::size_t,
                                  std::vector<std::vector<Index>>>;
    std::map<FunctorKey, Index> functor_index;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (auto& m : enumerate_functors(cats[i], cats[j])) {
          Index const c = d.add_cell(1, Index(i), Index(j));
          d.ids[2].push_back("F" + std::to_string(c));
          functor_index[{i, j, m.comps}] = c;
          out.functors.push_back(std::move(m));
          out.functor_source.push_back(i);
          out.functor_target.push_back(j);
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      d.idn[0][i] = functor_index.at(
          {i, i, GraphMorphism::identity(cats[i].graph).comps});
    }

    // 2-cells
    using TransKey = std::tuple<Index, Index, std::vector<Index>>;
    std::map<TransKey, Index> trans_index;
    std::vector<Index>        trans_src, trans_tgt;
    Index const               nf = d.count(1);
    for (Index p = 0; p < nf; ++p) {
      for (Index q = 0; q < nf; ++q) {
        if (d.src[1][p] != d.src[1][q] || d.tgt[1][p] != d.tgt[1][q]) {
          continue;
        }
        auto const& ce = cats[out.functor_source[p]];
        auto const& cf = cats[out.functor_target[p]];
        for (auto& t : enumerate_transformations(out.functors[p], out.functors[q], ce, cf)) {
          Index const c = d.add_cell(2, p, q);
          d.ids[3].push_back("T" + std::to_string(c));
          trans_index[{p, q, t.comps.at(0)}] = c;
          trans_src.push_back(p);
          trans_tgt.push_back(q);
          out.transformations.push_back(std::move(t));
        }
      }
    }
    for (Index p = 0; p < nf; ++p) {
      auto const id = identity_transformation(out.functors[p]);
      d.idn[1][p]   = trans_index.at({p, p, id.comps.at(0)});
    }

    // 3-cells: identity modifications only.
    Index const nt = d.count(2);
    if (depth == 3) {
      for (Index s = 0; s < nt; ++s) {
        Index const c = d.add_cell(3, s, s);
        d.ids[4].push_back("M" + std::to_string(c));
        d.idn[2][s] = c;
      }
    }

    auto g = std::make_shared<NGraph const>(NGraph::validate(std::move(d)));
    CategoryStructure s(g, parse_flags("global,unital,associative,interchange"));

    // Level 0: functor composition, F first.
    auto& v0 = s.vertical(0);
    for (Index p = 0; p < nf; ++p) {
      for (Index q = 0; q < nf; ++q) {
        if (g->tgt(1, p) != g->src(1, q)) {
          continue;
        }
        auto const pq = compose(out.functors[p], out.functors[q]);
        v0.set(*g, p, q,
               functor_index.at({out.functor_source[p], out.functor_target[q], pq.comps}));
      }
    }

    // Level 1: componentwise composition of transformations.
    auto& v1 = s.vertical(1);
    for (Index a = 0; a < nt; ++a) {
      for (Index b = 0; b < nt; ++b) {
        if (trans_tgt[a] != trans_src[b]) {
          continue;
        }
        auto const& cf = cats[out.functor_target[trans_src[a]]];
        auto const& ta = out.transformations[a].comps.at(0);
        auto const& tb = out.transformations[b].comps.at(0);
        std::vector<Index> c(ta.size());
        for (Index x = 0; x < c.size(); ++x) {
          c[x] = compose(cf, ta[x], tb[x], 0);
        }
        v1.set(*g, a, b, trans_index.at({trans_src[a], trans_tgt[b], c}));
      }
    }

    // Horizontal at level 0: sigma : F => G (i -> j), tau : H => K (j -> k),
    // (sigma * tau) x = H(sigma x) ; tau (G x).
    auto& h0 = s.horizontal(0);
    for (Index a = 0; a < nt; ++a) {
      for (Index b = 0; b < nt; ++b) {
        if (!composable(*g, TableKind::horizontal, 0, a, b)) {
          continue;
        }
        auto const& G   = out.functors[trans_tgt[a]];
        auto const& H   = out.functors[trans_src[b]];
        auto const& ck  = cats[out.functor_target[trans_src[b]]];
        auto const& sig = out.transformations[a].comps.at(0);
        auto const& tau = out.transformations[b].comps.at(0);
        std::vector<Index> c(sig.size());
        for (Index x = 0; x < c.size(); ++x) {
          c[x] = compose(ck, H(1, sig[x]), tau[G(0, x)], 0);
        }
        Index const fh = v0.get(trans_src[a], trans_src[b]);
        Index const gk = v0.get(trans_tgt[a], trans_tgt[b]);
        h0.set(*g, a, b, trans_index.at({fh, gk, c}));
      }
    }

    if (depth == 3) {
      auto& v2 = s.vertical(2);
      for (Index m = 0; m < nt; ++m) {
        v2.set(*g, m, m, m);
      }
      // 3-cells along 1-cells: idn(sigma) * idn(tau) = idn(sigma ; tau).
      auto& h1 = s.horizontal(1);
      for (Index a = 0; a < nt; ++a) {
        for (Index b = 0; b < nt; ++b) {
          if (trans_tgt[a] == trans_src[b]) {
            h1.set(*g, a, b, v1.get(a, b));
          }
        }
      }
    }

    out.structure = std::move(s);
    return out;
  }

}  // namespace ncat
