#pragma once

// Independent brute-force oracles used only by the tests. None of these call
// into the search or checking code they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "ncat/graph.hpp"

namespace ncat::oracle {

  // Number of dimension-indexed permutation families that fix the tail and
  // commute with src, tgt and idn. Tries every permutation of every
  // dimension, so keep graphs tiny.
  inline std::size_t automorphism_count(NGraph const& g) {
    int const                       n = g.n();
    std::vector<std::vector<Index>> perm(n + 2);
    for (int k = -1; k <= n; ++k) {
      perm[k + 1].resize(g.count(k));
      std::iota(perm[k + 1].begin(), perm[k + 1].end(), Index(0));
    }
    auto ok = [&]() {
      for (int k = 0; k <= n; ++k) {
        for (Index z = 0; z < g.count(k); ++z) {
          Index const w = perm[k + 1][z];
          if (perm[k][g.src(k, z)] != g.src(k, w)
              || perm[k][g.tgt(k, z)] != g.tgt(k, w)) {
            return false;
          }
          if (k < n && perm[k + 2][g.idn(k, z)] != g.idn(k, w)) {
            return false;
          }
        }
      }
      return true;
    };
    std::size_t                count = 0;
    std::function<void(int)> rec   = [&](int k) {
      if (k > n) {
        count += ok() ? 1 : 0;
        return;
      }
      auto& p = perm[k + 1];
      std::sort(p.begin(), p.end());
      do {
        rec(k + 1);
      } while (std::next_permutation(p.begin(), p.end()));
    };
    rec(0);
    return count;
  }

  using Table = std::vector<std::vector<Index>>;

  // True iff the total table is associative.
  inline bool associative(Table const& t) {
    Index const k = static_cast<Index>(t.size());
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        for (Index c = 0; c < k; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // All associative tables on {0..k-1} with unit 0.
  inline std::vector<Table> monoids(Index k) {
    std::vector<Table> out;
    Index const        free = (k - 1) * (k - 1);
    std::vector<Index> digits(free, 0);
    while (true) {
      Table t(k, std::vector<Index>(k));
      for (Index a = 0; a < k; ++a) {
        t[0][a] = a;
        t[a][0] = a;
      }
      for (Index i = 0; i < free; ++i) {
        t[1 + i / (k - 1)][1 + i % (k - 1)] = digits[i];
      }
      if (associative(t)) {
        out.push_back(t);
      }
      Index i = 0;
      while (i < free && ++digits[i] == k) {
        digits[i++] = 0;
      }
      if (i == free) {
        break;
      }
    }
    return out;
  }

  // Number of monoids of order k up to isomorphism (isomorphisms fix the
  // unit 0 and permute the rest).
  inline std::size_t monoid_iso_classes(Index k) {
    std::set<Table> classes;
    for (auto const& t : monoids(k)) {
      std::vector<Index> p(k);
      std::iota(p.begin(), p.end(), Index(0));
      Table best;
      do {
        Table r(k, std::vector<Index>(k));
        for (Index a = 0; a < k; ++a) {
          for (Index b = 0; b < k; ++b) {
            r[p[a]][p[b]] = p[t[a][b]];
          }
        }
        if (best.empty() || r < best) {
          best = r;
        }
      } while (std::next_permutation(p.begin() + 1, p.end()));
      classes.insert(best);
    }
    return classes.size();
  }

  // Diagrams between all pairs of sign strings of length <= max_points,
  // counted by trying every function from points to points. Signs are +1/-1;
  // the source is negated before matching.
  inline std::uint64_t cob_diagram_count(std::size_t max_points) {
    auto strings = [](std::size_t len) {
      std::vector<std::vector<int>> out;
      for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
        std::vector<int> v;
        for (std::size_t i = 0; i < len; ++i) {
          v.push_back((bits >> i) & 1 ? -1 : 1);
        }
        out.push_back(v);
      }
      return out;
    };
    std::uint64_t total = 0;
    for (std::size_t la = 0; la <= max_points; ++la) {
      for (std::size_t lb = 0; lb <= max_points; ++lb) {
        std::size_t const k = la + lb;
        for (auto const& a : strings(la)) {
          for (auto const& b : strings(lb)) {
            std::vector<int> sign;
            for (int x : a) {
              sign.push_back(-x);
            }
            sign.insert(sign.end(), b.begin(), b.end());
            std::vector<std::size_t> f(k, 0);
            for (;;) {
              bool ok = true;
              for (std::size_t p = 0; p < k && ok; ++p) {
                ok = f[p] != p && f[f[p]] == p && sign[p] + sign[f[p]] == 0;
              }
              total += ok ? 1 : 0;
              std::size_t p = 0;
              while (p < k && ++f[p] == k) {
                f[p++] = 0;
              }
              if (p == k) {
                break;
              }
            }
          }
        }
      }
    }
    return total;
  }

  // Endpoint pairing after stacking m (points 0..a+b-1, A* then B) on n
  // (points 0..b+d-1, B* then D), via connected components of the strand
  // graph. Result points: A* then D.
  inline std::vector<Index> glued_pairing(std::vector<Index> const& m,
                                          std::vector<Index> const& n,
                                          std::size_t a, std::size_t b,
                                          std::size_t d) {
    // Nodes: A* (a), B (b), D (d).
    std::size_t const        total = a + b + d;
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), std::size_t(0));
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t p = 0; p < a + b; ++p) {
      parent[find(p)] = find(m[p]);
    }
    // B* of n lands on B, D right after it.
    auto node_n = [&](std::size_t p) { return a + p; };
    for (std::size_t p = 0; p < b + d; ++p) {
      parent[find(node_n(p))] = find(node_n(n[p]));
    }
    std::vector<Index> out(a + d, undefined);
    auto ext = [&](std::size_t r) { return r < a ? r : b + r; };
    for (std::size_t r = 0; r < a + d; ++r) {
      for (std::size_t e = 0; e < a + d; ++e) {
        if (e != r && find(ext(r)) == find(ext(e))) {
          out[r] = Index(e);
        }
      }
    }
    return out;
  }

}  // namespace ncat::oracle
