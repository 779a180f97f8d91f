#include <random>

#include "doctest.h"
#include "ncat/composition.hpp"
#include "ncat/generators.hpp"
#include "oracles.hpp"

using namespace ncat;

namespace {

  // Three loops e, a, b on one object with a.a=b, b.a=a, a.b=b, b.b=b.
  std::vector<std::vector<Index>> const skew = {{0, 1, 2}, {1, 2, 2}, {2, 1, 2}};

  // Structure whose only 2-cells are identities, built over the arrow
  // category 0 -> 1. The level-1 table composes identity 2-cells.
  CategoryStructure identity_two_category() {
    GraphData d = GraphData::empty(2);
    d.add_cell(0, 0, 0);
    d.add_cell(0, 0, 0);
    d.idn[0][0] = d.add_cell(1, 0, 0);
    d.idn[0][1] = d.add_cell(1, 1, 1);
    d.add_cell(1, 0, 1);
    for (Index c = 0; c < 3; ++c) {
      d.idn[1][c] = d.add_cell(2, c, c);
    }
    auto              g = std::make_shared<NGraph const>(NGraph::validate(d));
    CategoryStructure s(g, parse_flags("global,unital,associative,interchange"));
    auto&             v0 = s.vertical(0);
    v0.set(*g, 0, 0, 0);
    v0.set(*g, 1, 1, 1);
    v0.set(*g, 0, 2, 2);
    v0.set(*g, 2, 1, 2);
    auto& v1 = s.vertical(1);
    auto& h0 = s.horizontal(0);
    for (Index c = 0; c < 3; ++c) {
      v1.set(*g, c, c, c);
    }
    for (auto const& [a, b, ab] : v0.entries()) {
      h0.set(*g, a, b, ab);  // identity 2-cells compose like their 1-cells
    }
    return s;
  }

}  // namespace

TEST_CASE("parse_flags") {
  auto f = parse_flags("global,unital,associative");
  CHECK(f.global);
  CHECK(f.unital);
  CHECK(f.associative);
  CHECK_FALSE(f.interchange);
  CHECK(parse_flags("partial") == AxiomFlags{});
  CHECK(parse_flags("") == AxiomFlags{});
  CHECK(to_string(f) == "global,unital,associative");
  CHECK_THROWS_AS(parse_flags("global,commutative"), Error);
}

TEST_CASE("CompTable rejects keys that do not meet") {
  auto  c = gen::arrow_category();
  auto& t = c.vertical(0);
  CHECK_THROWS_WITH_AS(t.set(*c.graph, 2, 2, 2),
                       doctest::Contains("NotComposable"),
                       Error);
  CHECK(t.defined_count() == 4);
  CHECK(t.entries().front() == std::array<Index, 3>{0, 0, 0});
}

TEST_CASE("level -1 table needs a monoidal carrier") {
  auto c = gen::cyclic_group(2);
  CHECK_NOTHROW(c.vertical(-1));
  GraphData d = GraphData::empty(1, 2);
  d.add_cell(0, 0, 1);
  d.idn[0][0] = d.add_cell(1, 0, 0);
  CategoryStructure s(std::make_shared<NGraph const>(NGraph::validate(d)));
  CHECK_THROWS_WITH_AS(s.vertical(-1),
                       doctest::Contains("LevelUnavailable"),
                       Error);
  CHECK_THROWS_WITH_AS(s.vertical(1), doctest::Contains("BadLevel"), Error);
}

TEST_CASE("check_typing") {
  auto c = gen::arrow_category();
  CHECK(check_typing(c).passed());

  c.vertical(0).set_unchecked(0, 2, 0);  // id_p0 ; arr = id_p0 : p0 -> p0
  auto rep = check_typing(c);
  CHECK_FALSE(rep.passed());
  auto const* r = rep.find("typing", 0);
  REQUIRE(r != nullptr);
  REQUIRE(r->counterexamples.size() == 1);
  CHECK(r->counterexamples[0].cells
        == std::vector<std::string>{"id_p0", "arr", "id_p0"});
  CHECK(r->counterexamples[0].expected == "p0 -> p1");

  CategoryStructure empty(c.graph);
  CHECK(check_typing(empty).passed());
}

TEST_CASE("horizontal typing reports untypeable entries") {
  auto s = identity_two_category();
  CHECK(check_typing(s).passed());
  s.vtables.at(0).erase(0, 2);
  auto rep = check_typing(s);
  auto const* r = rep.find("typing-horizontal", 0);
  REQUIRE(r != nullptr);
  CHECK(r->verdict == Verdict::fail);
  CHECK(r->counterexamples[0].what.find("untypeable") != std::string::npos);
}

TEST_CASE("check_global") {
  auto c = gen::arrow_category();
  CHECK(check_global(c, 0).passed());
  c.vertical(0).erase(2, 1);
  auto rep = check_global(c, 0);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.counterexample_count() == 1);
  CHECK(rep.results[0].counterexamples[0].cells
        == std::vector<std::string>{"arr", "id_p1"});
  CHECK_THROWS_WITH_AS(check_global(c, -1),
                       doctest::Contains("NoTableAtLevel"),
                       Error);

  std::mt19937_64 rng(3);
  auto            g = std::make_shared<NGraph const>(gen::skeletal_graph(1, 2, 1, rng));
  CategoryStructure s(g);
  auto&             t = s.vertical(0);
  for (Index a = 0; a < g->count(1); ++a) {
    for (Index b = 0; b < g->count(1); ++b) {
      if (g->tgt(1, a) == g->src(1, b)) {
        t.set(*g, a, b, g->hom(0, g->src(1, a), g->tgt(1, b)).front());
      }
    }
  }
  CHECK(check_global(s, 0).passed());
  CHECK(check_category(s).passed());

  GraphData none = GraphData::empty(1);
  CategoryStructure vac(std::make_shared<NGraph const>(NGraph::validate(none)));
  vac.vertical(0);
  CHECK(check_global(vac, 0).passed());
}

TEST_CASE("check_associativity") {
  SUBCASE("cyclic group of order 2") {
    auto z2 = gen::cyclic_group(2);
    REQUIRE(oracle::associative({{0, 1}, {1, 0}}));
    CHECK(check_associativity(z2, 0).passed());
  }
  SUBCASE("a chosen non-associative table") {
    REQUIRE_FALSE(oracle::associative(skew));
    auto s   = gen::monoid_category(skew);
    auto rep = check_associativity(s, 0);
    CHECK_FALSE(rep.passed());
    auto const& ces = rep.results[0].counterexamples;
    REQUIRE_FALSE(ces.empty());
    CHECK(ces[0].cells == std::vector<std::string>{"m_1", "m_1", "m_1"});
  }
  SUBCASE("empty table") {
    CategoryStructure s(gen::cyclic_group(3).graph);
    s.vertical(0);
    CHECK(check_associativity(s, 0).passed());
  }
  SUBCASE("one-sided triples are asymmetries") {
    auto s = gen::cyclic_group(3);
    s.vertical(0).erase(1, 1);  // (1.1).2 undefined, 1.(1.2) = 1
    auto rep = check_associativity(s, 0);
    CHECK(rep.passed());
    CHECK_FALSE(rep.results[0].asymmetries.empty());
  }
}

TEST_CASE("check_associativity agrees with the brute-force checker on monoid tables") {
  // Every unital table on 3 elements, associative or not.
  std::size_t agree = 0;
  for (Index code = 0; code < 81; ++code) {
    oracle::Table t{{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
    Index         c = code;
    for (Index a = 1; a < 3; ++a) {
      for (Index b = 1; b < 3; ++b) {
        t[a][b] = c % 3;
        c /= 3;
      }
    }
    auto s = gen::monoid_category(t);
    agree += check_associativity(s, 0).passed() == oracle::associative(t);
  }
  CHECK(agree == 81);
}

TEST_CASE("check_units") {
  auto z3 = gen::cyclic_group(3);
  CHECK(check_units(z3, 0).passed());

  auto bad = gen::cyclic_group(3);
  bad.vertical(0).set_unchecked(0, 1, 2);
  CHECK_FALSE(check_units(bad, 0).passed());

  auto missing = gen::cyclic_group(3);
  missing.vertical(0).erase(0, 1);
  missing.flags = {};
  CHECK(check_units(missing, 0).passed());
  missing.flags = parse_flags("global,unital");
  CHECK_FALSE(check_units(missing, 0).passed());

  z3.vertical(-1).set(*z3.graph, 0, 0, 0);
  CHECK(check_units(z3, -1).results[0].verdict == Verdict::not_applicable);
}

TEST_CASE("compose") {
  auto c = gen::arrow_category();
  CHECK(compose(c, 0, 2, 0) == 2);
  CHECK(compose(c, 0, 0, 0) == 0);
  CHECK_THROWS_WITH_AS(compose(c, 2, 0, 0),
                       doctest::Contains("NotComposable"),
                       Error);
  c.vertical(0).erase(2, 1);
  CHECK_THROWS_WITH_AS(compose(c, 2, 1, 0), doctest::Contains("NotDefined"), Error);
  CHECK_THROWS_WITH_AS(compose(c, 0, 0, -1),
                       doctest::Contains("NoTableAtLevel"),
                       Error);
}

TEST_CASE("check_groupoid") {
  CHECK(check_groupoid(gen::cyclic_group(2), 0).passed());

  auto idem = gen::monoid_category({{0, 1}, {1, 1}});
  auto rep  = check_groupoid(idem, 0);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.counterexample_count() == 1);
  CHECK(rep.results[0].counterexamples[0].cells == std::vector<std::string>{"m_1"});

  std::mt19937_64   rng(9);
  auto              g = std::make_shared<NGraph const>(gen::skeletal_graph(1, 3, 1, rng));
  CategoryStructure s(g);
  auto&             t = s.vertical(0);
  for (Index a = 0; a < g->count(1); ++a) {
    for (Index b = 0; b < g->count(1); ++b) {
      if (g->tgt(1, a) == g->src(1, b)) {
        t.set(*g, a, b, g->hom(0, g->src(1, a), g->tgt(1, b)).front());
      }
    }
  }
  CHECK(check_groupoid(s, 0).passed());

  auto broken = gen::cyclic_group(2);
  broken.vertical(0).set_unchecked(0, 1, 0);
  CHECK_THROWS_WITH_AS(check_groupoid(broken, 0),
                       doctest::Contains("UnitsRequired"),
                       Error);
  broken.flags.groupoid = true;
  auto const* r         = check_category(broken).find("groupoid", 0);
  REQUIRE(r != nullptr);
  CHECK(r->verdict == Verdict::fail);
}

TEST_CASE("groupoid inverses are unique") {
  for (Index k = 1; k <= 4; ++k) {
    auto s = gen::cyclic_group(k);
    REQUIRE(check_groupoid(s, 0).passed());
    auto const& t = *s.find_vertical(0);
    for (Index a = 0; a < k; ++a) {
      int inverses = 0;
      for (Index b = 0; b < k; ++b) {
        inverses += t.get(a, b) == 0 && t.get(b, a) == 0;
      }
      CHECK(inverses == 1);
    }
  }
}

TEST_CASE("check_cocategory") {
  auto        c = gen::arrow_category();
  auto const& g = *c.graph;
  CocompTable d;
  CHECK(check_cocategory(g, d).passed());
  d.entries[0] = CoEntry{0, 0, 0};
  d.entries[2] = CoEntry{1, 2, 1};
  CHECK(check_cocategory(g, d).passed());
  d.entries[2] = CoEntry{1, 0, 1};  // id_p0 does not end at p1
  auto rep     = check_cocategory(g, d);
  CHECK_FALSE(rep.passed());
  CHECK(rep.counterexample_count() == 1);
}

TEST_CASE("check_interchange") {
  auto s = identity_two_category();
  auto rep = check_interchange(s, 0);
  CHECK(rep.passed());
  CHECK(check_category(s).passed());

  // Vacuous: no horizontal entries.
  auto bare = identity_two_category();
  bare.htables.at(0) = CompTable(*bare.graph, TableKind::horizontal, 0);
  CHECK(check_interchange(bare, 0).passed());

  // With identity 2-cells only, every quadruple is (e, e, f, f), so both
  // sides read the same entry and a perturbation is caught by typing alone.
  auto pert = identity_two_category();
  pert.htables.at(0).set_unchecked(0, 2, 0);
  CHECK(check_interchange(pert, 0).passed());
  CHECK_FALSE(check_category(pert).passed());

  CategoryStructure none(s.graph);
  none.vertical(0);
  CHECK_THROWS_WITH_AS(check_interchange(none, 0),
                       doctest::Contains("MissingTables"),
                       Error);
  none.flags.interchange = true;
  CHECK(check_category(none).find("interchange")->verdict
        == Verdict::not_applicable);
}

TEST_CASE("check_category") {
  auto c = gen::arrow_category();
  CHECK(check_category(c).passed());
  CHECK(c.flags.global);
  CHECK(check_category(gen::empty_category()).passed());

  // Unital structures compose identities to identities.
  for (Index k = 1; k <= 3; ++k) {
    auto z = gen::cyclic_group(k);
    CHECK(compose(z, 0, 0, 0) == 0);
  }
}
