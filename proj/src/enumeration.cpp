#include "ncat/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

namespace ncat {

  namespace {

    // Table slot not yet visited by the search.
    constexpr Index unassigned = undefined - 1;

    struct Key {
      TableKind kind;
      int       level;
      Index     a, b;
    };

    std::vector<std::pair<Index, Index>> composable_keys(NGraph const&    g,
                                                         CompTable const& t) {
      std::vector<std::pair<Index, Index>> out;
      for (Index a = 0; a < t.size(); ++a) {
        for (Index b = 0; b < t.size(); ++b) {
          if (composable(g, t.kind(), t.level(), a, b)) {
            out.emplace_back(a, b);
          }
        }
      }
      return out;
    }

    // Every table of s in serialization order.
    std::vector<CompTable const*> tables_of(CategoryStructure const& s) {
      std::vector<CompTable const*> out;
      for (auto const& [level, t] : s.vtables) {
        out.push_back(&t);
      }
      for (auto const& [level, t] : s.htables) {
        out.push_back(&t);
      }
      return out;
    }

    std::vector<Key> search_keys(CategoryStructure const& s) {
      std::vector<Key> keys;
      for (auto const* t : tables_of(s)) {
        for (auto [a, b] : composable_keys(*s.graph, *t)) {
          keys.push_back({t->kind(), t->level(), a, b});
        }
      }
      return keys;
    }

    CompTable& table_of(CategoryStructure& s, Key const& k) {
      return k.kind == TableKind::vertical ? s.vtables.at(k.level)
                                           : s.htables.at(k.level);
    }

    void put_u32(std::string& out, std::uint32_t v) {
      out.push_back(static_cast<char>(v >> 24));
      out.push_back(static_cast<char>(v >> 16));
      out.push_back(static_cast<char>(v >> 8));
      out.push_back(static_cast<char>(v));
    }

    struct Classifier {
      std::vector<Automorphism> auts;

      void record(EnumResult& r, CategoryStructure const& s,
                  std::size_t max_reps) const {
        ++r.raw_count;
        auto [it, fresh] = r.canonical_counts.try_emplace(canonical_form(s, auts), 0);
        ++it->second;
        if (fresh) {
          ++r.iso_count;
          if (r.representatives.size() < max_reps) {
            r.representatives.push_back(s);
          }
        }
      }
    };

    class Search {
     public:
      Search(NGraph const& g, EnumSpec const& spec)
          : _spec(spec),
            _s(blank_structure(std::make_shared<NGraph const>(g), spec)),
            _g(*_s.graph),
            _keys(search_keys(_s)),
            _start(std::chrono::steady_clock::now()) {
        _cls.auts = automorphisms(_g);
        for (auto& [level, t] : _s.vtables) {
          prepare(t);
        }
        for (auto& [level, t] : _s.htables) {
          prepare(t);
        }
        for (auto const& k : _keys) {
          table_of(_s, k).set_unchecked(k.a, k.b, unassigned);
        }
      }

      EnumResult run() {
        descend(0);
        return std::move(_result);
      }

     private:
      struct Adjacency {
        std::vector<std::vector<Index>> succ, pred;
      };

      void prepare(CompTable const& t) {
        Adjacency adj;
        adj.succ.resize(t.size());
        adj.pred.resize(t.size());
        for (auto [a, b] : composable_keys(_g, t)) {
          adj.succ[a].push_back(b);
          adj.pred[b].push_back(a);
        }
        _adj[&t] = std::move(adj);
      }

      bool out_of_budget() {
        if (_result.nodes > _spec.max_nodes) {
          return true;
        }
        if ((_result.nodes & 1023) == 0) {
          std::chrono::duration<double> const elapsed
              = std::chrono::steady_clock::now() - _start;
          return elapsed.count() > _spec.time_budget_seconds;
        }
        return false;
      }

      std::vector<Index> candidates(Key const& k) const {
        std::vector<Index> out;
        bool const         global = _spec.flags.global;
        int const          dim    = table_cell_dim(k);
        if (k.kind == TableKind::vertical) {
          int const L = k.level;
          if (_spec.flags.unital && L >= 0) {
            Index const forced
                = k.a == _g.idn(L, _g.src(dim, k.a))   ? k.b
                  : k.b == _g.idn(L, _g.tgt(dim, k.b)) ? k.a
                                                         : undefined;
            if (forced != undefined) {
              out.push_back(forced);
              if (!global) {
                out.push_back(undefined);
              }
              return out;
            }
          }
          auto m = _g.hom(L, _g.src(dim, k.a), _g.tgt(dim, k.b));
          out.assign(m.begin(), m.end());
        } else {
          auto const& v  = _s.vtables.at(k.level);
          Index const es = v.get(_g.src(dim, k.a), _g.src(dim, k.b));
          Index const et = v.get(_g.tgt(dim, k.a), _g.tgt(dim, k.b));
          if (es != undefined && et != undefined) {
            auto m = _g.hom(dim - 1, es, et);
            out.assign(m.begin(), m.end());
          }
        }
        if (!global) {
          out.push_back(undefined);
        }
        return out;
      }

      static int table_cell_dim(Key const& k) {
        return k.kind == TableKind::vertical ? k.level + 1 : k.level + 2;
      }

      // Associativity triples touching the entry just set at (p, q).
      bool associative_at(CompTable const& t, Index p, Index q) const {
        auto const& adj = _adj.at(&t);
        auto get = [&](Index a, Index b) { return t.get(a, b); };
        auto bad = [&](Index a, Index b, Index c) {
          Index const ab = get(a, b), bc = get(b, c);
          if (ab == unassigned || bc == unassigned) {
            return false;
          }
          Index const lhs = ab == undefined ? undefined : get(ab, c);
          Index const rhs = bc == undefined ? undefined : get(a, bc);
          if (lhs == unassigned || rhs == unassigned) {
            return false;
          }
          return lhs != undefined && rhs != undefined && lhs != rhs;
        };
        for (Index c : adj.succ[q]) {
          if (bad(p, q, c)) {
            return false;
          }
        }
        for (Index a : adj.pred[p]) {
          if (bad(a, p, q)) {
            return false;
          }
        }
        for (Index a = 0; a < t.size(); ++a) {
          for (Index b : adj.succ[a]) {
            if (get(a, b) == p && bad(a, b, q)) {
              return false;
            }
            if (a == p && get(a, b) != unassigned) {
              for (Index c : adj.succ[b]) {
                if (get(b, c) == q && bad(p, b, c)) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      bool interchange_ok(int level) const {
        auto const& v = _s.vtables.at(level + 1);
        auto const& h = _s.htables.at(level);
        auto const  vert = v.entries();
        for (auto const& [a1, a2, a12] : vert) {
          for (auto const& [b1, b2, b12] : vert) {
            if (!composable(_g, TableKind::horizontal, level, a1, b1)) {
              continue;
            }
            Index const x = h.get(a1, b1), y = h.get(a2, b2);
            if (x == undefined || y == undefined || x == unassigned
                || y == unassigned
                || !composable(_g, TableKind::horizontal, level, a12, b12)) {
              continue;
            }
            Index const lhs = h.get(a12, b12);
            if (lhs == undefined || lhs == unassigned) {
              continue;
            }
            if (!composable(_g, TableKind::vertical, level + 1, x, y)) {
              return false;
            }
            Index const rhs = v.get(x, y);
            if (rhs != undefined && rhs != lhs) {
              return false;
            }
          }
        }
        return true;
      }

      bool consistent(Key const& k) const {
        if (k.kind == TableKind::vertical) {
          return !_spec.flags.associative
                 || associative_at(_s.vtables.at(k.level), k.a, k.b);
        }
        return !_spec.flags.interchange || interchange_ok(k.level);
      }

      void leaf() {
        if (!check_category(_s).passed()) {
          return;
        }
        if (_spec.maximal_only && !is_maximal(_s)) {
          return;
        }
        _cls.record(_result, _s, _spec.max_representatives);
      }

      void descend(std::size_t i) {
        if (!_result.exhausted) {
          return;
        }
        ++_result.nodes;
        if (out_of_budget()) {
          _result.exhausted = false;
          return;
        }
        if (i == _keys.size()) {
          leaf();
          return;
        }
        Key const& k    = _keys[i];
        auto       cand = candidates(k);
        if (cand.size() > 1) {
          ++_result.branch_points;
        }
        CompTable& t = table_of(_s, k);
        for (Index v : cand) {
          t.set_unchecked(k.a, k.b, v);
          if (consistent(k)) {
            descend(i + 1);
          }
          if (!_result.exhausted) {
            break;
          }
        }
        t.set_unchecked(k.a, k.b, unassigned);
      }

      EnumSpec const                                   _spec;
      CategoryStructure                                _s;
      NGraph const&                                    _g;
      std::vector<Key>                                 _keys;
      std::map<CompTable const*, Adjacency>            _adj;
      Classifier                                       _cls;
      EnumResult                                       _result;
      std::chrono::steady_clock::time_point            _start;
    };

  }  // namespace

  std::vector<int> resolve_levels(NGraph const& g, EnumSpec const& spec) {
    std::set<int> levels(spec.levels.begin(), spec.levels.end());
    if (levels.empty()) {
      for (int j = 0; j < g.n(); ++j) {
        levels.insert(j);
      }
    }
    for (int j : levels) {
      if (j < -1 || j > g.n() - 1) {
        throw Error(ErrorKind::bad_level,
                    "level " + std::to_string(j) + " outside [-1, "
                        + std::to_string(g.n() - 1) + "]");
      }
      if (j == -1 && !is_monoidal_carrier(g)) {
        throw Error(ErrorKind::level_unavailable,
                    "level -1 needs a single (-1)-cell");
      }
    }
    return {levels.begin(), levels.end()};
  }

  CategoryStructure blank_structure(std::shared_ptr<NGraph const> g,
                                    EnumSpec const&               spec) {
    auto              levels = resolve_levels(*g, spec);
    CategoryStructure s(g, spec.flags);
    for (int j : levels) {
      s.vertical(j);
    }
    if (spec.include_horizontal) {
      for (int j : levels) {
        if (j >= 0 && std::binary_search(levels.begin(), levels.end(), j + 1)) {
          s.horizontal(j);
        }
      }
    }
    return s;
  }

  EnumResult enumerate_structures(NGraph const& g, EnumSpec const& spec) {
    return Search(g, spec).run();
  }

  std::uint64_t oracle_space(NGraph const& g, EnumSpec const& spec) {
    auto s = blank_structure(std::make_shared<NGraph const>(g), spec);
    std::uint64_t space = 1;
    constexpr auto top  = std::numeric_limits<std::uint64_t>::max();
    for (auto const& k : search_keys(s)) {
      int const     dim = k.kind == TableKind::vertical ? k.level + 1 : k.level + 2;
      std::uint64_t c   = g.count(dim) + (spec.flags.global ? 0 : 1);
      if (c == 0) {
        return 0;
      }
      space = space > top / c ? top : space * c;
    }
    return space;
  }

  EnumResult brute_force_oracle(NGraph const&   g,
                                EnumSpec const& spec,
                                std::uint64_t   bound) {
    std::uint64_t const space = oracle_space(g, spec);
    if (space > bound) {
      throw Error(ErrorKind::space_too_large,
                  "oracle search space exceeds " + std::to_string(bound));
    }
    auto       s    = blank_structure(std::make_shared<NGraph const>(g), spec);
    auto const keys = search_keys(s);
    Classifier cls{automorphisms(g)};
    EnumResult r;
    if (space == 0) {
      return r;
    }
    std::vector<std::vector<Index>> values(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      int const dim = keys[i].kind == TableKind::vertical ? keys[i].level + 1
                                                          : keys[i].level + 2;
      for (Index v = 0; v < g.count(dim); ++v) {
        values[i].push_back(v);
      }
      if (!spec.flags.global) {
        values[i].push_back(undefined);
      }
    }
    std::vector<std::size_t> digit(keys.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        table_of(s, keys[i]).set_unchecked(keys[i].a, keys[i].b, values[i][digit[i]]);
      }
      ++r.nodes;
      if (check_category(s).passed() && (!spec.maximal_only || is_maximal(s))) {
        cls.record(r, s, spec.max_representatives);
      }
      std::size_t i = keys.size();
      while (i > 0) {
        --i;
        if (++digit[i] < values[i].size()) {
          break;
        }
        digit[i] = 0;
        if (i == 0) {
          return r;
        }
      }
      if (keys.empty()) {
        return r;
      }
    }
  }

  std::string serialize_tables(CategoryStructure const& s) {
    return canonical_form(s, {identity_automorphism(*s.graph)});
  }

  std::string canonical_form(CategoryStructure const& s) {
    return canonical_form(s, automorphisms(*s.graph));
  }

  std::string canonical_form(CategoryStructure const&         s,
                             std::vector<Automorphism> const& auts) {
    NGraph const& g      = *s.graph;
    auto const    tables = tables_of(s);
    std::vector<std::vector<std::pair<Index, Index>>> keys;
    for (auto const* t : tables) {
      keys.push_back(composable_keys(g, *t));
    }
    std::string best;
    bool        first = true;
    for (auto const& phi : auts) {
      auto const  psi = inverse(phi);
      std::string out;
      for (std::size_t i = 0; i < tables.size(); ++i) {
        auto const& t   = *tables[i];
        int const   dim = t.cell_dim();
        out.push_back(t.kind() == TableKind::vertical ? 'V' : 'H');
        put_u32(out, static_cast<std::uint32_t>(t.level() + 1));
        for (auto [a, b] : keys[i]) {
          Index const v = t.get(psi(dim, a), psi(dim, b));
          put_u32(out, v == undefined ? undefined : phi(dim, v));
        }
      }
      if (first || out < best) {
        best  = std::move(out);
        first = false;
      }
    }
    return best;
  }

  std::string to_hex(std::string const& bytes) {
    static char const digits[] = "0123456789abcdef";
    std::string       out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 15]);
    }
    return out;
  }

  bool is_maximal(CategoryStructure const& s) {
    if (!check_category(s).passed()) {
      return false;
    }
    NGraph const& g = *s.graph;
    for (auto const& k : search_keys(s)) {
      CategoryStructure t     = s;
      CompTable&        table = table_of(t, k);
      if (table.defined(k.a, k.b)) {
        continue;
      }
      for (Index v = 0; v < g.count(table.cell_dim()); ++v) {
        table.set_unchecked(k.a, k.b, v);
        if (check_category(t).passed()) {
          return false;
        }
      }
    }
    return true;
  }

  SkeletalCertificate verify_skeletal_uniqueness(NGraph const& g) {
    if (!is_skeletal(g)) {
      throw Error(ErrorKind::not_skeletal, "graph has a same-type hom-set "
                                           "without exactly one cell");
    }
    EnumSpec spec;
    spec.flags.global = true;
    auto r            = enumerate_structures(g, spec);
    SkeletalCertificate c;
    c.raw_count     = r.raw_count;
    c.branch_points = r.branch_points;
    c.unique        = r.exhausted && r.raw_count == 1;
    if (!r.representatives.empty()) {
      c.structure = r.representatives.front();
    }
    return c;
  }

}  // namespace ncat
