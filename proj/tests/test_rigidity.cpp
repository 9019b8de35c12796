#include <random>

#include "catch_amalgamated.hpp"
#include "gbsr/rigidity.hpp"
#include "support.hpp"

using namespace gbsr;
using testing::loop;

TEST_CASE("reduced", "[rigidity]") {
  CHECK(is_reduced(loop(1, 5)));
  const Graph g = parse_graph("edge e a 1 4 b\n");
  CHECK_FALSE(is_reduced(g));
  REQUIRE(collapse_witness(g).has_value());
  CHECK(g.end_name(*collapse_witness(g)) == "e.A");
  CHECK(is_reduced(parse_graph("vertex v\n")));
}

TEST_CASE("ascending", "[rigidity]") {
  CHECK(is_ascending(loop(1, 6)));
  CHECK(is_ascending(loop(6, 1)));
  CHECK_FALSE(is_ascending(loop(2, 6)));
  CHECK_FALSE(is_ascending(parse_graph("edge e v 1 3 v\nedge f v 2 2 v\n")));
  CHECK_THROWS_AS(is_ascending(parse_graph("edge e a 1 4 b\n")), Error);
}

TEST_CASE("strongly slide-free", "[rigidity]") {
  CHECK(is_strongly_slide_free(loop(2, 3)));
  CHECK_FALSE(is_strongly_slide_free(loop(2, 6)));
  CHECK_FALSE(is_strongly_slide_free(loop(3, 3)));
  const auto w = divisibility_witness(loop(2, 6));
  REQUIRE(w.has_value());
  CHECK(w->first == EdgeEnd{0, Side::B});
  CHECK(w->second == EdgeEnd{0, Side::A});
}

TEST_CASE("non-ascending criterion", "[rigidity]") {
  CHECK(edge_pair_rigid(parse_graph("edge l x 2 2 x\nedge e x 3 5 y\n")).rigid);
  CHECK(edge_pair_rigid(parse_graph("edge l x 1 1 x\nedge e x 4 5 y\n")).rigid);

  const Graph four = parse_graph("edge l x 1 1 x\nedge e x 4 5 y\nedge f x 3 7 z\n");
  const RigidityVerdict v = edge_pair_rigid(four);
  CHECK_FALSE(v.rigid);
  REQUIRE_FALSE(v.violations.empty());
  for (const auto& x : v.violations) CHECK(four.vertex_name(x.vertex) == "x");

  const RigidityVerdict bs26 = edge_pair_rigid(loop(2, 6));
  REQUIRE(bs26.violations.size() == 1);
  CHECK(bs26.violations[0].kind == ViolationKind::ExpandSlide);

  const RigidityVerdict eq = edge_pair_rigid(parse_graph("edge e1 x 2 2 x\nedge e2 x 2 3 y\n"));
  CHECK_FALSE(eq.rigid);
  for (const auto& x : eq.violations) CHECK(x.kind == ViolationKind::Slide);

  CHECK_THROWS_AS(edge_pair_rigid(parse_graph("edge e a 1 4 b\n")), Error);
  CHECK_THROWS_AS(edge_pair_rigid(loop(1, 4)), Error);
}

TEST_CASE("ascending criterion", "[rigidity]") {
  CHECK(ascending_rigid(7));
  CHECK(ascending_rigid(1));
  CHECK_FALSE(ascending_rigid(4));
  CHECK_FALSE(ascending_rigid(6));
  for (Label n = 1; n <= 10000; ++n) REQUIRE(ascending_rigid(n) == divisors_are_powers(n));
}

TEST_CASE("full verdicts", "[rigidity]") {
  const RigidityVerdict a = check(loop(1, 2));
  CHECK((a.reduced && a.ascending && a.rigid));
  const RigidityVerdict b = check(loop(2, 6));
  CHECK((b.reduced && !b.ascending && !b.strongly_slide_free && !b.rigid));
  const RigidityVerdict c = check(parse_graph("edge e a 3 1 b\n"));
  CHECK((!c.reduced && !c.rigid));
  REQUIRE(c.violations.size() == 1);
  CHECK(c.violations[0].kind == ViolationKind::Collapsible);

  const RigidityVerdict d = check(loop(1, 12));
  std::vector<Label> divisors;
  for (const auto& x : d.violations) divisors.push_back(x.divisor);
  CHECK(divisors == std::vector<Label>{2, 3, 4, 6});
}

TEST_CASE("describe", "[rigidity]") {
  const Graph g = loop(1, 6);
  CHECK(describe(g, check(g)).rfind("reduced ascending not-rigid (s=6 is not 1 or prime)\n", 0) == 0);
  const Graph h = loop(1, 7);
  CHECK(describe(h, check(h)) == "reduced ascending rigid (s=7 is prime)\nstrongly-slide-free: no\n");
  const Graph k = loop(2, 6);
  CHECK(describe(k, check(k)) ==
        "reduced not-ascending not-rigid (1 violating pair)\nstrongly-slide-free: no\nviolation: v e1.B e1.A expand-slide\n");
}

TEST_CASE("consistency properties", "[rigidity][property]") {
  std::mt19937 rng(17);
  for (int i = 0; i < 500; ++i) {
    const Graph g = testing::random_graph(rng, 1 + rng() % 4, 8);
    const RigidityVerdict v = check(g);
    if (v.rigid) CHECK(v.reduced);
    if (v.reduced && !v.ascending && v.strongly_slide_free) CHECK(v.rigid);
    if (!v.reduced || v.ascending) continue;
    // Relabelling the vertices cannot change the verdict.
    GraphSpec spec = g.spec();
    for (auto& name : spec.vertices) name = "r" + name;
    for (auto& e : spec.edges) {
      e.from = "r" + e.from;
      e.to = "r" + e.to;
      std::swap(e.from, e.to);
      std::swap(e.label_from, e.label_to);
    }
    const RigidityVerdict w = check(Graph::create(spec));
    CHECK(w.rigid == v.rigid);
    CHECK(w.violations.size() == v.violations.size());
  }
}
