#include "ncat/generators.hpp"

#include <algorithm>
#include <numeric>

namespace ncat::gen {

  namespace {

    // Permutes the cells of every dimension >= 0 and remaps all maps.
    void shuffle_cells(GraphData& d, std::mt19937_64& rng) {
      std::vector<std::vector<Index>> perm(d.n + 1);  // old -> new
      for (int k = 0; k <= d.n; ++k) {
        perm[k].resize(d.count(k));
        std::iota(perm[k].begin(), perm[k].end(), Index(0));
        std::shuffle(perm[k].begin(), perm[k].end(), rng);
      }
      GraphData out = GraphData::empty(d.n, d.tail);
      for (int k = 0; k <= d.n; ++k) {
        Index const m = d.count(k);
        out.src[k].assign(m, 0);
        out.tgt[k].assign(m, 0);
        for (Index i = 0; i < m; ++i) {
          Index const s = d.src[k][i], t = d.tgt[k][i];
          out.src[k][perm[k][i]] = k == 0 ? s : perm[k - 1][s];
          out.tgt[k][perm[k][i]] = k == 0 ? t : perm[k - 1][t];
        }
        if (k < d.n) {
          out.idn[k].assign(m, 0);
          for (Index i = 0; i < m; ++i) {
            out.idn[k][perm[k][i]] = perm[k + 1][d.idn[k][i]];
          }
        }
      }
      d = std::move(out);
    }

    template <typename T>
    T uniform(std::mt19937_64& rng, T lo, T hi) {
      return std::uniform_int_distribution<T>(lo, hi)(rng);
    }

  }  // namespace

  NGraph one_object_graph(Index loops) {
    GraphData d = GraphData::empty(1);
    d.add_cell(0, 0, 0);
    for (Index i = 0; i < loops; ++i) {
      d.add_cell(1, 0, 0);
    }
    d.idn[0][0] = 0;
    return NGraph::validate(std::move(d));
  }

  CategoryStructure make_category(FiniteCategory const& c, AxiomFlags flags) {
    GraphData d = GraphData::empty(1);
    for (Index x = 0; x < c.objects; ++x) {
      d.add_cell(0, 0, 0);
    }
    for (auto const& [s, t] : c.arrows) {
      d.add_cell(1, s, t);
    }
    for (Index x = 0; x < c.objects; ++x) {
      d.idn[0][x] = c.identity[x];
    }
    if (!c.object_ids.empty() || !c.arrow_ids.empty()) {
      d.ids.resize(3);
      d.ids[1] = c.object_ids;
      d.ids[2] = c.arrow_ids;
    }
    auto              g = std::make_shared<NGraph const>(NGraph::validate(std::move(d)));
    CategoryStructure s(g, flags);
    auto&             t = s.vertical(0);
    for (Index a = 0; a < c.mult.size(); ++a) {
      for (Index b = 0; b < c.mult[a].size(); ++b) {
        if (c.mult[a][b] != undefined) {
          t.set(*g, a, b, c.mult[a][b]);
        }
      }
    }
    return s;
  }

  CategoryStructure monoid_category(std::vector<std::vector<Index>> const& mult,
                                    std::string const& prefix) {
    FiniteCategory c;
    c.objects  = 1;
    c.identity = {0};
    c.mult     = mult;
    c.object_ids.push_back(prefix + "_obj");
    for (Index i = 0; i < mult.size(); ++i) {
      c.arrows.emplace_back(0, 0);
      c.arrow_ids.push_back(i == 0 ? prefix + "_e" : prefix + "_" + std::to_string(i));
    }
    return make_category(c);
  }

  CategoryStructure cyclic_group(Index order) {
    std::vector<std::vector<Index>> mult(order, std::vector<Index>(order));
    for (Index a = 0; a < order; ++a) {
      for (Index b = 0; b < order; ++b) {
        mult[a][b] = (a + b) % order;
      }
    }
    return monoid_category(mult, "z" + std::to_string(order));
  }

  CategoryStructure terminal_category() {
    return monoid_category({{0}}, "one");
  }

  CategoryStructure empty_category() {
    return make_category(FiniteCategory{});
  }

  CategoryStructure arrow_category() {
    FiniteCategory c;
    c.objects    = 2;
    c.arrows     = {{0, 0}, {1, 1}, {0, 1}};
    c.identity   = {0, 1};
    Index const u = undefined;
    c.mult       = {{0, u, 2}, {u, 1, u}, {u, 2, u}};
    c.object_ids = {"p0", "p1"};
    c.arrow_ids  = {"id_p0", "id_p1", "arr"};
    return make_category(c);
  }

  CategoryStructure discrete_category(Index objects) {
    FiniteCategory c;
    c.objects = objects;
    c.mult.assign(objects, std::vector<Index>(objects, undefined));
    for (Index x = 0; x < objects; ++x) {
      c.arrows.emplace_back(x, x);
      c.identity.push_back(x);
      c.mult[x][x] = x;
    }
    return make_category(c);
  }

  NGraph random_graph(std::mt19937_64& rng, RandomGraphOptions const& opt) {
    GraphData   d = GraphData::empty(opt.n, opt.tail);
    Index const s0 = opt.tail == 2 ? uniform<Index>(rng, 0, 1) : 0;
    Index const t0 = opt.tail == 2 ? uniform<Index>(rng, 0, 1) : 0;
    Index const objects = uniform<Index>(rng, 1, std::max<Index>(1, opt.max_objects));
    for (Index i = 0; i < objects; ++i) {
      d.add_cell(0, s0, t0);
    }
    for (int k = 0; k < opt.n; ++k) {
      for (Index x = 0; x < d.count(k); ++x) {
        d.idn[k][x] = d.add_cell(k + 1, x, x);
      }
      Index const extra = uniform<Index>(rng, 0, opt.max_extra);
      for (Index e = 0; e < extra; ++e) {
        Index const        x = uniform<Index>(rng, 0, d.count(k) - 1);
        std::vector<Index> same;
        for (Index y = 0; y < d.count(k); ++y) {
          if (d.src[k][y] == d.src[k][x] && d.tgt[k][y] == d.tgt[k][x]) {
            same.push_back(y);
          }
        }
        Index const y = same[uniform<std::size_t>(rng, 0, same.size() - 1)];
        if (uniform<int>(rng, 0, 1) == 0) {
          d.add_cell(k + 1, x, y);
        } else {
          d.add_cell(k + 1, y, x);
        }
      }
    }
    shuffle_cells(d, rng);
    return NGraph::validate(std::move(d));
  }

  NGraph skeletal_graph(int n, Index objects, Index tail, std::mt19937_64& rng) {
    GraphData d = GraphData::empty(n, tail);
    for (Index i = 0; i < objects; ++i) {
      d.add_cell(0, 0, tail == 2 ? 1 : 0);
    }
    for (Index x = 0; x < objects; ++x) {
      for (Index y = 0; y < objects; ++y) {
        Index const c = d.add_cell(1, x, y);
        if (x == y) {
          d.idn[0][x] = c;
        }
      }
    }
    for (int k = 1; k < n; ++k) {
      // The level below is skeletal, so parallel k-cells are equal and the
      // only (k+1)-cells needed are identities.
      for (Index a = 0; a < d.count(k); ++a) {
        d.idn[k][a] = d.add_cell(k + 1, a, a);
      }
    }
    shuffle_cells(d, rng);
    return NGraph::validate(std::move(d));
  }

  std::vector<NGraph> skeletal_family(std::size_t   count,
                                      Index         max_cells,
                                      std::uint64_t seed) {
    std::mt19937_64     rng(seed);
    Index               max_objects = 1;
    while ((max_objects + 1) * (max_objects + 1) <= max_cells) {
      ++max_objects;
    }
    std::vector<NGraph> out;
    for (std::size_t i = 0; out.size() < count; ++i) {
      int const   n       = 1 + static_cast<int>(i % 2);
      Index const tail    = 1 + static_cast<Index>((i / 2) % 2);
      Index const objects = 1 + static_cast<Index>((i / 4) % max_objects);
      out.push_back(skeletal_graph(n, objects, tail, rng));
    }
    return out;
  }

}  // namespace ncat::gen
