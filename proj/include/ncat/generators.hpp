#pragma once

// Small instance generators: hand-made categories, random valid n-graphs and
// procedurally generated skeletal graphs.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ncat/composition.hpp"
#include "ncat/graph.hpp"

namespace ncat::gen {

  // One object with `loops` 1-cells, the first of which is the identity.
  NGraph one_object_graph(Index loops);

  // A 1-category given by its arrows and full composition table. Objects are
  // 0..objects-1; arrows[k] = {src, tgt}; identity[x] is the arrow that is the
  // identity of x; mult[a][b] is a;b (diagram order) or `undefined` when a
  // and b do not meet.
  struct FiniteCategory {
    Index                                objects = 0;
    std::vector<std::pair<Index, Index>> arrows;
    std::vector<Index>                   identity;
    std::vector<std::vector<Index>>      mult;
    std::vector<std::string>             object_ids;
    std::vector<std::string>             arrow_ids;
  };

  CategoryStructure make_category(FiniteCategory const& c,
                                  AxiomFlags            flags = {true, true, true});

  // A monoid as a one-object category; element 0 must be the unit.
  CategoryStructure monoid_category(std::vector<std::vector<Index>> const& mult,
                                    std::string const& prefix = "m");

  CategoryStructure cyclic_group(Index order);
  CategoryStructure terminal_category();          // one object, identity only
  CategoryStructure empty_category();             // no objects
  CategoryStructure arrow_category();             // 0 -> 1
  CategoryStructure discrete_category(Index objects);

  struct RandomGraphOptions {
    int   n           = 1;
    Index tail        = 1;
    Index max_objects = 3;
    // Extra non-identity cells added per dimension, at most.
    Index max_extra = 3;
  };

  NGraph random_graph(std::mt19937_64& rng, RandomGraphOptions const& opt);

  // A skeletal n-graph on `objects` objects (n in {1, 2}), with cell indices
  // shuffled by `rng`. tail = 2 uses the zero type (t0, t1).
  NGraph skeletal_graph(int n, Index objects, Index tail, std::mt19937_64& rng);

  // `count` skeletal graphs with n in {1, 2} and at most `max_cells` cells
  // per dimension, deterministic in `seed`.
  std::vector<NGraph> skeletal_family(std::size_t count,
                                      Index       max_cells,
                                      std::uint64_t seed);

}  // namespace ncat::gen
