#include "ncat/cobordism.hpp"

#include <map>

namespace ncat {

  namespace {

    Sign flip(Sign s) {
      return s == Sign::plus ? Sign::minus : Sign::plus;
    }

    void require_valid(MatchDiagram const& m, char const* who) {
      if (!is_valid(m)) {
        throw Error(ErrorKind::schema_error,
                    std::string(who) + ": invalid diagram " + describe(m));
      }
    }

    // Smallest unmatched point first, paired with each later point of
    // opposite sign.
    void matchings(MatchDiagram& m, std::vector<MatchDiagram>& out) {
      Index p = 0;
      while (p < m.points() && m.pairing[p] != undefined) {
        ++p;
      }
      if (p == m.points()) {
        out.push_back(m);
        return;
      }
      for (Index q = p + 1; q < m.points(); ++q) {
        if (m.pairing[q] != undefined || point_sign(m, q) == point_sign(m, p)) {
          continue;
        }
        m.pairing[p] = q;
        m.pairing[q] = p;
        matchings(m, out);
        m.pairing[p] = undefined;
        m.pairing[q] = undefined;
      }
    }

  }  // namespace

  std::string to_string(SignedBoundary const& b) {
    std::string s = "[";
    for (Sign x : b.signs) {
      s += x == Sign::plus ? '+' : '-';
    }
    return s + "]";
  }

  SignedBoundary parse_boundary(std::string_view s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
      throw Error(ErrorKind::syntax_error,
                  "boundary must look like [+-], got '" + std::string(s) + "'");
    }
    SignedBoundary b;
    for (char c : s.substr(1, s.size() - 2)) {
      if (c == '+') {
        b.signs.push_back(Sign::plus);
      } else if (c == '-') {
        b.signs.push_back(Sign::minus);
      } else {
        throw Error(ErrorKind::syntax_error,
                    "bad sign '" + std::string(1, c) + "' in boundary");
      }
    }
    return b;
  }

  SignedBoundary reverse_orientation(SignedBoundary const& b) {
    SignedBoundary r;
    for (Sign x : b.signs) {
      r.signs.push_back(flip(x));
    }
    return r;
  }

  SignedBoundary concat(SignedBoundary const& a, SignedBoundary const& b) {
    SignedBoundary r = a;
    r.signs.insert(r.signs.end(), b.signs.begin(), b.signs.end());
    return r;
  }

  Sign point_sign(MatchDiagram const& m, Index p) {
    Index const a = Index(m.source.size());
    return p < a ? flip(m.source.signs[p]) : m.target.signs[p - a];
  }

  bool is_valid(MatchDiagram const& m) {
    Index const k = Index(m.source.size() + m.target.size());
    if (m.pairing.size() != k) {
      return false;
    }
    for (Index p = 0; p < k; ++p) {
      Index const q = m.pairing[p];
      if (q >= k || q == p || m.pairing[q] != p
          || point_sign(m, p) == point_sign(m, q)) {
        return false;
      }
    }
    return true;
  }

  std::string describe(MatchDiagram const& m) {
    std::string s = to_string(m.source) + ">" + to_string(m.target) + ":";
    bool        first = true;
    for (Index p = 0; p < m.points(); ++p) {
      Index const q = m.pairing[p];
      if (q != undefined && q < p) {
        continue;
      }
      if (!first) {
        s += ",";
      }
      first = false;
      s += std::to_string(p) + "-" + (q == undefined ? "?" : std::to_string(q));
    }
    return s;
  }

  MatchDiagram make_cylinder(SignedBoundary const& a) {
    Index const  k = Index(a.size());
    MatchDiagram m{a, a, std::vector<Index>(2 * k)};
    for (Index i = 0; i < k; ++i) {
      m.pairing[i]     = k + i;
      m.pairing[k + i] = i;
    }
    return m;
  }

  MatchDiagram glue(MatchDiagram const& m, MatchDiagram const& n) {
    if (m.target != n.source) {
      throw Error(ErrorKind::boundary_mismatch,
                  "cannot glue " + to_string(m.target) + " onto "
                      + to_string(n.source));
    }
    require_valid(m, "glue");
    require_valid(n, "glue");
    Index const a = Index(m.source.size());
    Index const b = Index(m.target.size());
    Index const d = Index(n.target.size());

    MatchDiagram out{m.source, n.target, std::vector<Index>(a + d, undefined)};
    // Result point r as (diagram, local point): A* lives in m, D in n.
    auto walk = [&](bool in_m, Index p) -> Index {
      for (;;) {
        if (in_m) {
          Index const q = m.pairing[p];
          if (q < a) {
            return q;
          }
          in_m = false;
          p    = q - a;  // same point of B, seen as B* in n
        } else {
          Index const q = n.pairing[p];
          if (q >= b) {
            return a + (q - b);
          }
          in_m = true;
          p    = a + q;
        }
      }
    };
    for (Index r = 0; r < a + d; ++r) {
      if (out.pairing[r] != undefined) {
        continue;
      }
      Index const e = r < a ? walk(true, r) : walk(false, b + (r - a));
      out.pairing[r] = e;
      out.pairing[e] = r;
    }
    // Strands touching only B close up into loops and are dropped.
    return out;
  }

  MatchDiagram disjoint_union(MatchDiagram const& m, MatchDiagram const& n) {
    require_valid(m, "disjoint_union");
    require_valid(n, "disjoint_union");
    Index const a = Index(m.source.size());
    Index const b = Index(m.target.size());
    Index const c = Index(n.source.size());
    Index const d = Index(n.target.size());

    // Layout: A*, C*, B, D.
    auto from_m = [&](Index p) { return p < a ? p : a + c + (p - a); };
    auto from_n = [&](Index p) { return p < c ? a + p : a + c + b + (p - c); };

    MatchDiagram out{concat(m.source, n.source), concat(m.target, n.target),
                     std::vector<Index>(a + b + c + d)};
    for (Index p = 0; p < a + b; ++p) {
      out.pairing[from_m(p)] = from_m(m.pairing[p]);
    }
    for (Index p = 0; p < c + d; ++p) {
      out.pairing[from_n(p)] = from_n(n.pairing[p]);
    }
    return out;
  }

  std::vector<MatchDiagram> all_diagrams(SignedBoundary const& a,
                                         SignedBoundary const& b) {
    std::vector<MatchDiagram> out;
    MatchDiagram m{a, b, std::vector<Index>(a.size() + b.size(), undefined)};
    if (m.points() % 2 == 0) {
      matchings(m, out);
    }
    return out;
  }

  std::vector<SignedBoundary> all_boundaries(std::size_t max_points) {
    std::vector<SignedBoundary> out;
    for (std::size_t len = 0; len <= max_points; ++len) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
        SignedBoundary b;
        for (std::size_t i = 0; i < len; ++i) {
          bool const minus = (bits >> (len - 1 - i)) & 1;
          b.signs.push_back(minus ? Sign::minus : Sign::plus);
        }
        out.push_back(std::move(b));
      }
    }
    return out;
  }

  CobTruncation build_cob_truncation(std::size_t max_points, std::size_t max_cells) {
    if (max_points > 16) {
      throw Error(ErrorKind::space_too_large,
                  "max_points " + std::to_string(max_points) + " is too large");
    }
    CobTruncation t{CategoryStructure(nullptr), all_boundaries(max_points), {}};
    Index const   objects = Index(t.objects.size());

    std::vector<Index> first_out(objects + 1);
    std::vector<Index> cylinder(objects);
    for (Index x = 0; x < objects; ++x) {
      first_out[x] = Index(t.diagrams.size());
      for (Index y = 0; y < objects; ++y) {
        for (auto& m : all_diagrams(t.objects[x], t.objects[y])) {
          t.diagrams.push_back(std::move(m));
          if (t.diagrams.size() > max_cells) {
            throw Error(ErrorKind::space_too_large,
                        "cobordism truncation at " + std::to_string(max_points)
                            + " points exceeds " + std::to_string(max_cells)
                            + " diagrams");
          }
        }
      }
    }
    first_out[objects] = Index(t.diagrams.size());

    std::map<SignedBoundary, Index> object_index;
    for (Index x = 0; x < objects; ++x) {
      object_index.emplace(t.objects[x], x);
    }
    std::map<MatchDiagram, Index> diagram_index;
    for (Index i = 0; i < t.diagrams.size(); ++i) {
      diagram_index.emplace(t.diagrams[i], i);
    }

    GraphData d = GraphData::empty(1);
    d.ids.resize(3);
    for (Index x = 0; x < objects; ++x) {
      d.add_cell(0, 0, 0, to_string(t.objects[x]));
    }
    for (auto const& m : t.diagrams) {
      d.add_cell(1, object_index.at(m.source), object_index.at(m.target), describe(m));
    }
    for (Index x = 0; x < objects; ++x) {
      cylinder[x] = diagram_index.at(make_cylinder(t.objects[x]));
      d.idn[0][x] = cylinder[x];
    }
    auto g = std::make_shared<NGraph const>(NGraph::validate(std::move(d)));

    t.structure = CategoryStructure(g, AxiomFlags{.global = true, .unital = true,
                                                  .associative = true});
    auto& table = t.structure.vertical(0);
    for (Index i = 0; i < t.diagrams.size(); ++i) {
      Index const y = g->tgt(1, i);
      for (Index j = first_out[y]; j < first_out[y + 1]; ++j) {
        table.set_unchecked(i, j, diagram_index.at(glue(t.diagrams[i], t.diagrams[j])));
      }
    }
    return t;
  }

  namespace {

    struct SetsData {
      std::vector<Index>              sizes;  // 0-cell x is {0..sizes[x]-1}
      std::vector<std::vector<Index>> maps;   // 1-cell values
      std::vector<std::pair<Index, Index>> changes;  // 2-cell (f, g)
      GraphData graph;
    };

    SetsData sets_data(std::size_t max_size) {
      if (max_size > 3) {
        throw Error(ErrorKind::space_too_large,
                    "sets graph limited to max_size 3, got "
                        + std::to_string(max_size));
      }
      SetsData s;
      s.graph = GraphData::empty(2);
      s.graph.ids.resize(4);
      for (Index k = 1; k <= max_size; ++k) {
        s.sizes.push_back(k);
        s.graph.add_cell(0, 0, 0, "S" + std::to_string(k));
      }
      Index const objects = Index(s.sizes.size());
      s.graph.idn[0].assign(objects, undefined);
      for (Index x = 0; x < objects; ++x) {
        for (Index y = 0; y < objects; ++y) {
          Index const a = s.sizes[x], b = s.sizes[y];
          std::vector<Index> f(a, 0);
          for (;;) {
            std::string id = "S" + std::to_string(a) + ">S" + std::to_string(b) + ":";
            for (Index v : f) {
              id += std::to_string(v);
            }
            Index const i = s.graph.add_cell(1, x, y, id);
            s.maps.push_back(f);
            bool is_id = x == y;
            for (Index p = 0; p < a && is_id; ++p) {
              is_id = f[p] == p;
            }
            if (is_id) {
              s.graph.idn[0][x] = i;
            }
            // odometer, last position fastest
            Index p = a;
            while (p > 0 && ++f[p - 1] == b) {
              f[--p] = 0;
            }
            if (p == 0) {
              break;
            }
          }
        }
      }
      Index const arrows = Index(s.maps.size());
      s.graph.idn[1].assign(arrows, undefined);
      for (Index f = 0; f < arrows; ++f) {
        for (Index g = 0; g < arrows; ++g) {
          if (s.graph.src[1][f] != s.graph.src[1][g]
              || s.graph.tgt[1][f] != s.graph.tgt[1][g]) {
            continue;
          }
          Index const c = s.graph.add_cell(2, f, g,
                                           "(" + s.graph.ids[2][f] + ","
                                               + s.graph.ids[2][g] + ")");
          s.changes.emplace_back(f, g);
          if (f == g) {
            s.graph.idn[1][f] = c;
          }
        }
      }
      return s;
    }

  }  // namespace

  NGraph gen_sets_graph(std::size_t max_size) {
    return NGraph::validate(sets_data(max_size).graph);
  }

  CategoryStructure sets_structure(std::size_t max_size) {
    SetsData    s = sets_data(max_size);
    auto        g = std::make_shared<NGraph const>(NGraph::validate(s.graph));
    Index const arrows = Index(s.maps.size());

    std::map<std::pair<Index, Index>, Index> change_index;
    for (Index c = 0; c < s.changes.size(); ++c) {
      change_index.emplace(s.changes[c], c);
    }
    // Same values can name maps into different codomains.
    auto compose_map = [&](Index f, Index h) {
      std::vector<Index> v(s.maps[f].size());
      for (Index p = 0; p < v.size(); ++p) {
        v[p] = s.maps[h][s.maps[f][p]];
      }
      for (Index r = 0; r < arrows; ++r) {
        if (g->src(1, r) == g->src(1, f) && g->tgt(1, r) == g->tgt(1, h)
            && s.maps[r] == v) {
          return r;
        }
      }
      return undefined;
    };

    CategoryStructure out(g, AxiomFlags{.global = true, .unital = true,
                                        .associative = true, .interchange = true});
    auto& v0 = out.vertical(0);
    for (Index f = 0; f < arrows; ++f) {
      for (Index h = 0; h < arrows; ++h) {
        if (g->tgt(1, f) == g->src(1, h)) {
          v0.set_unchecked(f, h, compose_map(f, h));
        }
      }
    }
    Index const changes = Index(s.changes.size());
    auto&       v1      = out.vertical(1);
    auto&       h0      = out.horizontal(0);
    for (Index c = 0; c < changes; ++c) {
      auto const [f, g1] = s.changes[c];
      for (Index e = 0; e < changes; ++e) {
        auto const [h, k] = s.changes[e];
        if (g1 == h) {
          v1.set_unchecked(c, e, change_index.at({f, k}));
        }
        if (g->tgt(1, f) == g->src(1, h)) {
          h0.set_unchecked(c, e,
                           change_index.at({compose_map(f, h), compose_map(g1, k)}));
        }
      }
    }
    return out;
  }

}  // namespace ncat
