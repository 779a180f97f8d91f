#pragma once

// Graph morphisms, functors, natural transformations and modifications
// between finite structures, their enumeration, and the 2- and 3-graphs whose
// cells are categories, functors, transformations and modifications.
//
// Composites are read in diagram order throughout: "(ga) o (tx)" means tx
// first, then ga, i.e. compose(cF, tx, ga).

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ncat/composition.hpp"
#include "ncat/graph.hpp"

namespace ncat {

  struct GraphMorphism {
    std::shared_ptr<NGraph const>   domain;
    std::shared_ptr<NGraph const>   codomain;
    std::vector<std::vector<Index>> comps;  // comps[d + 1], d in [-1, n]

    Index operator()(int dim, Index i) const {
      return comps[dim + 1][i];
    }

    static GraphMorphism identity(std::shared_ptr<NGraph const> g);

    friend bool operator==(GraphMorphism const& a, GraphMorphism const& b) {
      return *a.domain == *b.domain && *a.codomain == *b.codomain
             && a.comps == b.comps;
    }
  };

  // `first` then `second`. Throws dimension_mismatch unless the codomain of
  // first is the domain of second.
  GraphMorphism compose(GraphMorphism const& first, GraphMorphism const& second);

  struct VarianceSpec {
    std::set<int> contravariant_levels;
    // Intertwining up to a 2-cell. Not supported.
    bool weakened = false;
  };

  // Throws dimension_mismatch if the endpoints differ in n or the component
  // vectors have the wrong shape.
  AxiomReport check_graph_morphism(GraphMorphism const& m);

  // check_graph_morphism with the codomain replaced by its opposite at each
  // listed level. Throws bad_level for a level outside [1, n] and
  // unsupported for a weakened spec.
  AxiomReport check_contravariant(GraphMorphism const& m, VarianceSpec const& v);

  // Graph morphism squares, then one "functor" result per table of cE.
  // Throws dimension_mismatch if the structures do not sit over m.
  AxiomReport check_functor(GraphMorphism const&     m,
                            CategoryStructure const& cE,
                            CategoryStructure const& cF);

  struct Transformation {
    GraphMorphism f, g;
    // comps[i][x] is the (i+1)-cell t x of the codomain, for every i-cell x
    // of the domain.
    std::map<int, std::vector<Index>> comps;
  };

  // Identity transformation on f at dimension i: t x = idn(f x).
  Transformation identity_transformation(GraphMorphism const& f, int dim = 0);

  // Results: "functor-source", "functor-target", then "component-typing"
  // and "naturality" per component dimension.
  AxiomReport check_transformation(Transformation const&    tr,
                                   CategoryStructure const& cE,
                                   CategoryStructure const& cF);

  struct Modification {
    Transformation s, t;
    // comps[i][x] is the (i+2)-cell mu x of the codomain.
    std::map<int, std::vector<Index>> comps;
  };

  Modification identity_modification(Transformation const& s, int dim = 0);

  // Results: "transformation-s" and "transformation-t", then per
  // dimension i "modification-typing", "path-equations" and
  // "two-cell-equation". The last is not-applicable unless cF has a
  // horizontal table at level i. Throws bad_level if the codomain has no
  // (i+2)-cells.
  AxiomReport check_modification(Modification const&      md,
                                 CategoryStructure const& cE,
                                 CategoryStructure const& cF);

  // Every morphism passing check_functor, in lexicographic order of
  // components. Throws space_too_large after `max_nodes` search nodes.
  std::vector<GraphMorphism> enumerate_functors(CategoryStructure const& cE,
                                                CategoryStructure const& cF,
                                                std::uint64_t max_nodes = 10'000'000);

  // Every component family at the given dimensions passing
  // check_transformation, in lexicographic order.
  std::vector<Transformation> enumerate_transformations(
      GraphMorphism const&     f,
      GraphMorphism const&     g,
      CategoryStructure const& cE,
      CategoryStructure const& cF,
      std::set<int> const&     dims      = {0},
      std::uint64_t            max_nodes = 10'000'000);

  struct CatOfCats {
    CategoryStructure           structure;
    std::vector<GraphMorphism>  functors;         // 1-cells, by index
    std::vector<std::size_t>    functor_source;   // input category index
    std::vector<std::size_t>    functor_target;
    std::vector<Transformation> transformations;  // 2-cells, by index
  };

  // Inputs must be 1-categories (unsupported otherwise). depth 2 gives the
  // 2-graph of categories, functors and transformations; depth 3 adds the
  // modifications between them, which for 1-category inputs are the
  // identities. Flags: {global, unital, associative, interchange}.
  CatOfCats build_cat_of_cats(std::vector<CategoryStructure> const& cats,
                              int                                   depth = 2,
                              std::vector<std::string> const&       names = {});

}  // namespace ncat
