#include <cmath>

#include "doctest.h"
#include "ncat/cobordism.hpp"
#include "oracles.hpp"

using namespace ncat;

namespace {

  SignedBoundary B(char const* s) {
    return parse_boundary(s);
  }

  MatchDiagram cup() {
    return all_diagrams(B("[]"), B("[+-]")).at(0);
  }

  MatchDiagram cap() {
    return all_diagrams(B("[+-]"), B("[]")).at(0);
  }

  int net(SignedBoundary const& b) {
    int s = 0;
    for (Sign x : b.signs) {
      s += x == Sign::plus ? 1 : -1;
    }
    return s;
  }

}  // namespace

TEST_CASE("boundary strings") {
  CHECK(to_string(B("[+-+]")) == "[+-+]");
  CHECK(B("[]").size() == 0);
  CHECK(reverse_orientation(B("[+--]")) == B("[-++]"));
  CHECK(concat(B("[+]"), B("[--]")) == B("[+--]"));
  CHECK_THROWS_WITH_AS(parse_boundary("+-"), doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_AS(parse_boundary("[+x]"), Error);
}

TEST_CASE("diagram validity") {
  auto c = make_cylinder(B("[+-]"));
  CHECK(is_valid(c));
  CHECK(c.pairing == std::vector<Index>{2, 3, 0, 1});
  CHECK(describe(c) == "[+-]>[+-]:0-2,1-3");

  MatchDiagram bad = c;
  bad.pairing = {1, 0, 3, 2};  // cap then cup
  CHECK(is_valid(bad));
  bad.target = B("[++]");
  CHECK_FALSE(is_valid(bad));
  MatchDiagram odd{B("[+]"), B("[]"), {0}};
  CHECK_FALSE(is_valid(odd));
  MatchDiagram asym{B("[+-]"), B("[+-]"), {2, 3, 0, 0}};
  CHECK_FALSE(is_valid(asym));
}

TEST_CASE("diagram enumeration counts") {
  CHECK(all_diagrams(B("[+]"), B("[+]")).size() == 1);
  CHECK(all_diagrams(B("[+]"), B("[-]")).empty());
  CHECK(all_diagrams(B("[+-]"), B("[+-]")).size() == 2);
  CHECK(all_diagrams(B("[+-+]"), B("[+]")).size() == 2);
  CHECK(all_diagrams(B("[+]"), B("[]")).empty());
  for (auto const& m : all_diagrams(B("[+-+-]"), B("[-+]"))) {
    CHECK(is_valid(m));
  }
  CHECK(all_boundaries(3).size() == 15);
}

TEST_CASE("cap after cup leaves the empty diagram") {
  auto e = glue(cup(), cap());
  CHECK(e.source == B("[]"));
  CHECK(e.target == B("[]"));
  CHECK(e.pairing.empty());
  CHECK(e == make_cylinder(B("[]")));

  // Zig-zag: straightens to the cylinder.
  auto left  = disjoint_union(make_cylinder(B("[+]")), cup());
  auto right = disjoint_union(cap(), make_cylinder(B("[+]")));
  CHECK(left.target == B("[++-]"));
  CHECK_THROWS_WITH_AS(glue(left, right), doctest::Contains("BoundaryMismatch"), Error);
  auto cup2 = all_diagrams(B("[]"), B("[-+]")).at(0);
  auto zig  = glue(disjoint_union(make_cylinder(B("[+]")), cup2), right);
  CHECK(zig == make_cylinder(B("[+]")));
}

TEST_CASE("glue agrees with the strand-graph oracle") {
  auto objects = all_boundaries(3);
  int  checked = 0;
  for (auto const& a : objects) {
    for (auto const& b : objects) {
      for (auto const& d : objects) {
        for (auto const& m : all_diagrams(a, b)) {
          for (auto const& n : all_diagrams(b, d)) {
            auto g = glue(m, n);
            CHECK(is_valid(g));
            CHECK(g.pairing
                  == oracle::glued_pairing(m.pairing, n.pairing, a.size(),
                                           b.size(), d.size()));
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("sign balance") {
  for (auto const& a : all_boundaries(3)) {
    for (auto const& b : all_boundaries(3)) {
      auto ds = all_diagrams(a, b);
      if (net(a) != net(b)) {
        CHECK(ds.empty());
      }
      for (auto const& m : ds) {
        Index plus = 0;
        for (Index p = 0; p < m.points(); ++p) {
          plus += point_sign(m, p) == Sign::plus ? 1 : 0;
        }
        CHECK(2 * plus == m.points());
      }
    }
  }
}

TEST_CASE("disjoint union commutes with glue") {
  auto objects = all_boundaries(2);
  std::vector<std::pair<MatchDiagram, MatchDiagram>> pairs;  // composable
  for (auto const& a : objects) {
    for (auto const& b : objects) {
      for (auto const& c : objects) {
        for (auto const& m : all_diagrams(a, b)) {
          for (auto const& n : all_diagrams(b, c)) {
            pairs.emplace_back(m, n);
          }
        }
      }
    }
  }
  // A deterministic sample keeps this quadratic loop small.
  for (std::size_t i = 0; i < pairs.size(); i += 7) {
    for (std::size_t j = 0; j < pairs.size(); j += 11) {
      auto const& [m1, m2] = pairs[i];
      auto const& [n1, n2] = pairs[j];
      CHECK(glue(disjoint_union(m1, n1), disjoint_union(m2, n2))
            == disjoint_union(glue(m1, m2), glue(n1, n2)));
    }
  }
  CHECK(disjoint_union(cup(), make_cylinder(B("[]"))) == cup());
}

TEST_CASE("orientation reversal") {
  auto m = all_diagrams(B("[+-]"), B("[+-]")).at(1);
  MatchDiagram r{reverse_orientation(m.source), reverse_orientation(m.target),
                 m.pairing};
  CHECK(is_valid(r));
}

TEST_CASE("cobordism truncation") {
  for (std::size_t k = 0; k <= 3; ++k) {
    auto t = build_cob_truncation(k);
    INFO("max_points = " << k);
    CHECK(t.structure.graph->count(0) == t.objects.size());
    CHECK(t.structure.graph->count(1) == oracle::cob_diagram_count(k));
    auto rep = check_category(t.structure);
    CHECK(rep.passed());
    if (k <= 3) {
      CHECK(check_associativity(t.structure, 0).passed());
      CHECK(check_units(t.structure, 0).passed());
    }
  }
  auto t3 = build_cob_truncation(3);
  CHECK(t3.objects.size() == 15);
  CHECK(t3.diagrams.size() == 163);
  CHECK(t3.structure.graph->id({0, 0}) == "[]");

  auto t2 = build_cob_truncation(2);
  CHECK_FALSE(check_groupoid(t2.structure, 0).passed());

  CHECK_THROWS_WITH_AS(build_cob_truncation(3, 100), doctest::Contains("SpaceTooLarge"),
                       Error);
}

TEST_CASE("unit law up to four points") {
  auto t = build_cob_truncation(4);
  CHECK(check_units(t.structure, 0).passed());
  CHECK(check_global(t.structure, 0).passed());
}

TEST_CASE("sets graph") {
  auto g1 = gen_sets_graph(1);
  CHECK(g1.count(0) == 1);
  CHECK(g1.count(1) == 1);
  CHECK(g1.count(2) == 1);
  CHECK(is_skeletal(g1));

  for (std::size_t k = 1; k <= 3; ++k) {
    auto g = gen_sets_graph(k);
    CHECK(g.n() == 2);
    for (Index x = 0; x < g.count(0); ++x) {
      for (Index y = 0; y < g.count(0); ++y) {
        auto const expected = std::pow(double(y + 1), double(x + 1));
        CHECK(g.hom(0, x, y).size() == std::size_t(expected));
        for (Index f : g.hom(0, x, y)) {
          for (Index h : g.hom(0, x, y)) {
            CHECK(g.hom(1, f, h).size() == 1);
          }
        }
      }
    }
  }
  CHECK_THROWS_WITH_AS(gen_sets_graph(4), doctest::Contains("SpaceTooLarge"), Error);

  auto s = sets_structure(2);
  CHECK(check_category(s).passed());
  CHECK(check_interchange(s, 0).passed());
}
