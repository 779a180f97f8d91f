#include <random>
#include <set>

#include "doctest.h"
#include "ncat/generators.hpp"
#include "ncat/graph.hpp"
#include "oracles.hpp"

using namespace ncat;

namespace {

  // x, y with a : x -> y and the two identities.
  GraphData arrow_data() {
    GraphData d = GraphData::empty(1);
    d.add_cell(0, 0, 0);
    d.add_cell(0, 0, 0);
    d.idn[0][0] = d.add_cell(1, 0, 0);
    d.idn[0][1] = d.add_cell(1, 1, 1);
    d.add_cell(1, 0, 1);  // a
    return d;
  }

  // One object, 1-cells {idn, a, b}, 2-cells = their identities + extra.
  GraphData two_level_data() {
    GraphData d = GraphData::empty(2);
    d.add_cell(0, 0, 0);
    d.idn[0][0] = d.add_cell(1, 0, 0);
    d.add_cell(1, 0, 0);
    d.add_cell(1, 0, 0);
    for (Index a = 0; a < 3; ++a) {
      d.idn[1][a] = d.add_cell(2, a, a);
    }
    return d;
  }

  bool has_violation(std::vector<Violation> const& v, ErrorKind k, CellId c) {
    for (auto const& x : v) {
      if (x.kind == k && x.cell == c) {
        return true;
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("validate_graph accepts the free identity graph") {
  auto g = gen::one_object_graph(1);
  CHECK(g.n() == 1);
  CHECK(g.count(-1) == 1);
  CHECK(g.count(0) == 1);
  CHECK(g.count(1) == 1);
  CHECK(g.id(CellId{0, 0}) == "x0");
}

TEST_CASE("validate_graph reports each violated condition") {
  SUBCASE("section law") {
    auto d = arrow_data();
    d.idn[0][1] = 2;  // a : x -> y is not an identity of y
    auto v = check_graph(d);
    CHECK(has_violation(v, ErrorKind::section_violation, {0, 1}));
    CHECK_THROWS_AS(NGraph::validate(d), GraphValidationError);
  }
  SUBCASE("globularity") {
    GraphData d = GraphData::empty(2);
    d.add_cell(0, 0, 0);
    d.add_cell(0, 0, 0);
    d.idn[0][0] = d.add_cell(1, 0, 0);
    d.idn[0][1] = d.add_cell(1, 1, 1);
    Index a     = d.add_cell(1, 0, 1);
    for (Index c = 0; c < 3; ++c) {
      d.idn[1][c] = d.add_cell(2, c, c);
    }
    // a : x -> y  =>  idn(x) : x -> x   has endpoints that disagree
    Index z = d.add_cell(2, a, 0);
    auto  v = check_graph(d);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ErrorKind::globularity_violation);
    CHECK(v[0].cell == CellId{2, z});
  }
  SUBCASE("zero type") {
    GraphData d = GraphData::empty(1, 2);
    d.add_cell(0, 0, 1);
    d.add_cell(0, 1, 1);
    d.idn[0][0] = d.add_cell(1, 0, 0);
    d.idn[0][1] = d.add_cell(1, 1, 1);
    CHECK(has_violation(check_graph(d), ErrorKind::zero_type_violation, {0, 1}));
  }
  SUBCASE("index out of range") {
    auto d      = arrow_data();
    d.src[1][2] = 7;
    CHECK(has_violation(check_graph(d), ErrorKind::index_out_of_range, {1, 2}));
  }
  SUBCASE("tail size") {
    auto d = arrow_data();
    d.tail = 3;
    CHECK(check_graph(d).front().kind == ErrorKind::bad_tail_size);
    d.tail = 0;
    CHECK(check_graph(d).front().kind == ErrorKind::bad_tail_size);
  }
  SUBCASE("duplicate ids") {
    auto d = arrow_data();
    d.ids  = {{"t"}, {"x", "y"}, {"i", "j", "x"}};
    CHECK(check_graph(d).front().kind == ErrorKind::schema_error);
  }
}

TEST_CASE("hom_set") {
  auto g = NGraph::validate(arrow_data());
  CHECK(hom_set(g, {0, 1}, {0, 0}).members.empty());
  CHECK(hom_set(g, {0, 0}, {0, 1}).members == std::vector<Index>{2});
  CHECK(hom_set(g, {0, 0}, {0, 0}).members == std::vector<Index>{0});
  CHECK_THROWS_WITH_AS(hom_set(g, {0, 0}, {1, 0}),
                       doctest::Contains("DimensionMismatch"),
                       Error);

  // Cells of different types have an empty hom-set.
  auto d = arrow_data();
  d.n    = 2;
  d.src.emplace_back();
  d.tgt.emplace_back();
  d.idn.emplace_back(3, undefined);
  for (Index c = 0; c < 3; ++c) {
    d.idn[1][c] = d.add_cell(2, c, c);
  }
  auto g2 = NGraph::validate(d);
  CHECK(hom_set(g2, {1, 0}, {1, 2}).members.empty());
}

TEST_CASE("cell_type") {
  auto g = NGraph::validate(arrow_data());
  CHECK(cell_type(g, {0, 1}) == std::pair{CellId{-1, 0}, CellId{-1, 0}});
  CHECK(cell_type(g, {1, 1}) == std::pair{CellId{0, 1}, CellId{0, 1}});
  CHECK(cell_type(g, {1, 2}) == std::pair{CellId{0, 0}, CellId{0, 1}});

  auto d = two_level_data();
  Index z = d.add_cell(2, 1, 2);
  auto g2 = NGraph::validate(d);
  CHECK(cell_type(g2, {2, z}) == std::pair{CellId{1, 1}, CellId{1, 2}});
}

TEST_CASE("iterated_boundary") {
  auto  d  = two_level_data();
  Index z  = d.add_cell(2, 1, 2);
  auto  g  = NGraph::validate(d);
  CHECK(iterated_boundary(g, {2, z}, 1, Side::source) == CellId{1, 1});
  CHECK(iterated_boundary(g, {2, z}, 1, Side::target) == CellId{1, 2});
  CHECK(iterated_boundary(g, {2, z}, 0, Side::source) == CellId{0, 0});
  CHECK(iterated_boundary(g, {2, z}, -1, Side::target) == CellId{-1, 0});
  CHECK_THROWS_WITH_AS(iterated_boundary(g, {2, z}, 2, Side::source),
                       doctest::Contains("BadLevel"),
                       Error);
}

TEST_CASE("is_skeletal") {
  std::mt19937_64 rng(1);
  CHECK(is_skeletal(gen::skeletal_graph(1, 2, 1, rng)));
  CHECK(is_skeletal(gen::skeletal_graph(2, 2, 2, rng)));
  // empty hom-set between two objects
  CHECK_FALSE(is_skeletal(NGraph::validate(arrow_data())));
  // two parallel loops
  CHECK_FALSE(is_skeletal(gen::one_object_graph(2)));
  CHECK(is_skeletal(gen::one_object_graph(1)));
}

TEST_CASE("opposite") {
  auto g  = NGraph::validate(arrow_data());
  auto op = opposite(g, 1);
  CHECK(op.src(1, 2) == 1);
  CHECK(op.tgt(1, 2) == 0);
  CHECK(opposite(op, 1) == g);
  CHECK_THROWS_WITH_AS(opposite(g, 0), doctest::Contains("BadLevel"), Error);
  CHECK_THROWS_WITH_AS(opposite(g, 2), doctest::Contains("BadLevel"), Error);

  // Reversing 2-cells leaves the level-0 hom-sets alone.
  auto  d  = two_level_data();
  Index z  = d.add_cell(2, 1, 2);
  auto  g2 = NGraph::validate(d);
  auto  o2 = opposite(g2, 2);
  CHECK(o2.hom(0, 0, 0).size() == g2.hom(0, 0, 0).size());
  CHECK(o2.hom(1, 2, 1).front() == z);
  CHECK(o2.hom(1, 1, 2).empty());
}

TEST_CASE("is_monoidal_carrier") {
  CHECK(is_monoidal_carrier(gen::one_object_graph(1)));
  GraphData d = GraphData::empty(1, 2);
  d.add_cell(0, 0, 1);
  d.idn[0][0] = d.add_cell(1, 0, 0);
  CHECK_FALSE(is_monoidal_carrier(NGraph::validate(d)));
  d.src[0][0] = 1;  // diagonal type, still two (-1)-cells
  CHECK_FALSE(is_monoidal_carrier(NGraph::validate(d)));
}

TEST_CASE("hom_graph") {
  SUBCASE("identity tower") {
    GraphData d = GraphData::empty(2);
    d.add_cell(0, 0, 0);
    d.idn[0][0] = d.add_cell(1, 0, 0);
    d.idn[1][0] = d.add_cell(2, 0, 0);
    auto g      = NGraph::validate(d);
    auto h      = hom_graph(g, {0, 0}, {0, 0});
    CHECK(h.graph.n() == 1);
    CHECK(h.graph.count(-1) == 1);
    CHECK(h.graph.count(0) == 1);
    CHECK(h.graph.count(1) == 1);
  }
  SUBCASE("two parallel 1-cells with two 2-cells between them") {
    GraphData d = GraphData::empty(2);
    d.add_cell(0, 0, 0);
    d.add_cell(0, 0, 0);
    d.idn[0][0] = d.add_cell(1, 0, 0);
    d.idn[0][1] = d.add_cell(1, 1, 1);
    Index a     = d.add_cell(1, 0, 1);
    Index b     = d.add_cell(1, 0, 1);
    for (Index c = 0; c < 4; ++c) {
      d.idn[1][c] = d.add_cell(2, c, c);
    }
    d.add_cell(2, a, b);
    d.add_cell(2, a, b);
    auto g = NGraph::validate(d);
    auto h = hom_graph(g, {0, 0}, {0, 1});
    CHECK(h.graph.count(-1) == 2);
    CHECK(h.graph.count(0) == 2);
    CHECK(h.embedding[1] == std::vector<Index>{a, b});
    // identities of a and b plus the two cross arrows
    CHECK(h.graph.count(1) == 4);
    CHECK(h.graph.hom(0, 0, 1).size() == 2);
  }
  SUBCASE("empty hom-set") {
    auto  d = arrow_data();
    d.n     = 2;
    d.src.emplace_back();
    d.tgt.emplace_back();
    d.idn.emplace_back(3, undefined);
    for (Index c = 0; c < 3; ++c) {
      d.idn[1][c] = d.add_cell(2, c, c);
    }
    auto g = NGraph::validate(d);
    auto h = hom_graph(g, {0, 1}, {0, 0});
    CHECK(h.graph.count(0) == 0);
    CHECK(h.graph.count(1) == 0);
  }
  CHECK_THROWS_WITH_AS(hom_graph(NGraph::validate(arrow_data()), {0, 0}, {0, 0}),
                       doctest::Contains("DimensionTooHigh"),
                       Error);
}

TEST_CASE("automorphisms") {
  SUBCASE("single identity loop") {
    auto a = automorphisms(gen::one_object_graph(1));
    CHECK(a.size() == 1);
  }
  SUBCASE("two parallel non-identity loops swap") {
    auto g = gen::one_object_graph(3);
    auto a = automorphisms(g);
    CHECK(a.size() == oracle::automorphism_count(g));
    REQUIRE(a.size() == 2);
    CHECK(a[0] == identity_automorphism(g));
    CHECK(a[1].maps[2] == std::vector<Index>{0, 2, 1});
  }
  SUBCASE("disjoint copies swap") {
    GraphData d = GraphData::empty(1);
    for (Index x = 0; x < 2; ++x) {
      d.add_cell(0, 0, 0);
      d.idn[0][x] = d.add_cell(1, x, x);
    }
    d.add_cell(1, 0, 0);
    d.add_cell(1, 1, 1);
    auto g = NGraph::validate(d);
    auto a = automorphisms(g);
    CHECK(a.size() == 2);
    CHECK(a[1].maps[1] == std::vector<Index>{1, 0});
  }
}

TEST_CASE("automorphisms form a group that matches brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    gen::RandomGraphOptions opt;
    opt.n           = 1 + trial % 2;
    opt.tail        = 1 + (trial / 2) % 2;
    opt.max_objects = 2;
    opt.max_extra   = 2;
    auto g          = gen::random_graph(rng, opt);
    bool small      = true;
    for (int k = 0; k <= g.n(); ++k) {
      small = small && g.count(k) <= 6;
    }
    if (!small) {
      continue;
    }
    auto auts = automorphisms(g);
    CHECK(auts.size() == oracle::automorphism_count(g));
    std::set<Automorphism> set(auts.begin(), auts.end());
    CHECK(set.size() == auts.size());
    CHECK(set.count(identity_automorphism(g)) == 1);
    for (auto const& a : auts) {
      CHECK(is_automorphism(g, a));
      CHECK(set.count(inverse(a)) == 1);
      for (auto const& b : auts) {
        CHECK(set.count(compose(a, b)) == 1);
      }
    }
  }
}

TEST_CASE("hom-sets partition each dimension and contain identities") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    gen::RandomGraphOptions opt;
    opt.n    = 1 + trial % 3;
    opt.tail = 1 + trial % 2;
    auto g   = gen::random_graph(rng, opt);
    for (int i = 0; i < g.n(); ++i) {
      std::vector<int> seen(g.count(i + 1), 0);
      for (Index x = 0; x < g.count(i); ++x) {
        auto xx = hom_set(g, {i, x}, {i, x}).members;
        CHECK(std::find(xx.begin(), xx.end(), g.idn(i, x)) != xx.end());
        for (Index y = 0; y < g.count(i); ++y) {
          for (Index z : hom_set(g, {i, x}, {i, y}).members) {
            ++seen[z];
          }
        }
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
    for (int i = 1; i <= g.n(); ++i) {
      CHECK(opposite(opposite(g, i), i) == g);
    }
  }
}

TEST_CASE("is_skeletal agrees with exhaustive hom-set sizes") {
  std::mt19937_64 rng(5);
  auto            check = [](NGraph const& g) {
    bool expect = true;
    for (int i = 0; i < g.n(); ++i) {
      for (Index x = 0; x < g.count(i); ++x) {
        for (Index y = 0; y < g.count(i); ++y) {
          if (cell_type(g, {i, x}) == cell_type(g, {i, y})
              && hom_set(g, {i, x}, {i, y}).members.size() != 1) {
            expect = false;
          }
        }
      }
    }
    return expect == is_skeletal(g);
  };
  for (int trial = 0; trial < 30; ++trial) {
    gen::RandomGraphOptions opt;
    opt.n         = 1 + trial % 2;
    opt.max_extra = trial % 3;
    CHECK(check(gen::random_graph(rng, opt)));
  }
  for (auto const& g : gen::skeletal_family(10, 4, 3)) {
    CHECK(is_skeletal(g));
    CHECK(check(g));
  }
}
