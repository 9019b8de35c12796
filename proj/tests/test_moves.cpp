#include <functional>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "gbsr/explorer.hpp"
#include "gbsr/moves.hpp"
#include "support.hpp"

using namespace gbsr;
using testing::loop;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::SyntaxError;
}

template <class T>
std::size_t count_kind(const std::vector<Move>& moves) {
  std::size_t n = 0;
  for (const auto& m : moves) n += std::holds_alternative<T>(m);
  return n;
}

}  // namespace

TEST_CASE("collapse", "[moves]") {
  const MarkedState s = MarkedState::seed(parse_graph("edge c a 3 1 b\nedge l b 5 7 b\n"));
  const MarkedState t = collapse(s, "c");
  CHECK(is_isomorphic(t.graph(), parse_graph("edge l a 15 21 a\n")));
  CHECK(t.graph().vertex_names() == std::vector<std::string>{"a"});
  CHECK(check_invariants(t).ok());

  const MarkedState u = collapse(MarkedState::seed(parse_graph("edge c a 1 1 b\nedge l b 2 3 b\n")), "c");
  CHECK(is_isomorphic(u.graph(), loop(2, 3)));
  CHECK(check_invariants(u).ok());

  CHECK(code_of([] { collapse(MarkedState::seed(loop(1, 2)), "e1"); }) == ErrorCode::NotCollapsible);
  CHECK(code_of([] { collapse(MarkedState::seed(parse_graph("edge c a 2 3 b\n")), "c"); }) == ErrorCode::NotCollapsible);
  CHECK(code_of([] { collapse(MarkedState::seed(loop(1, 2)), "zz"); }) == ErrorCode::UnknownEdge);
}

TEST_CASE("expand", "[moves]") {
  const MarkedState s = MarkedState::seed(loop(2, 6));
  const MarkedState t = expand(s, "v", 2, {});
  CHECK(is_isomorphic(t.graph(), parse_graph("edge d v 2 1 u\nedge e1 v 2 6 v\n")));
  CHECK(t.graph().find_edge("d").has_value());
  CHECK(t.graph().find_vertex("u").has_value());
  CHECK(check_invariants(t).ok());

  const MarkedState back = collapse(t, "d");
  CHECK(is_isomorphic(back.graph(), s.graph()));
  CHECK(fingerprint(back, 4) == fingerprint(s, 4));

  const std::vector<NamedEnd> six{{"e1", Side::B}};
  CHECK(code_of([&] { expand(s, "v", 4, six); }) == ErrorCode::NotDivisible);
  const std::vector<NamedEnd> elsewhere{{"e", Side::B}};
  CHECK(code_of([&] { expand(MarkedState::seed(parse_graph("edge e a 2 2 b\n")), "a", 2, elsewhere); }) ==
        ErrorCode::WrongOrigin);

  const MarkedState both = expand(s, "v", 2, std::vector<NamedEnd>{{"e1", Side::A}, {"e1", Side::B}});
  CHECK(is_isomorphic(both.graph(), parse_graph("edge d v 2 1 u\nedge e1 u 1 3 u\n")));
  CHECK(check_invariants(both).ok());

  // Names that are already taken get fresh ones.
  const MarkedState named_clash = expand(MarkedState::seed(parse_graph("edge d u 2 3 u\n")), "u", 2, {});
  CHECK(named_clash.graph().vertex_count() == 2);
  CHECK(named_clash.graph().edge_count() == 2);
  CHECK(check_invariants(named_clash).ok());
}

TEST_CASE("slides on the two-vertex state", "[moves]") {
  MarkedState s = expand(MarkedState::seed(loop(2, 6)), "v", 2, {});
  s = slide(s, {"e1", Side::B}, {"d", Side::A});
  CHECK(s.graph().label(parse_end(s.graph(), "e1.B")) == 3);
  CHECK(s.graph().origin(parse_end(s.graph(), "e1.B")) == s.graph().vertex_or_throw("u"));
  s = slide(s, {"e1", Side::A}, {"d", Side::A});
  CHECK(s.graph().label(parse_end(s.graph(), "e1.A")) == 1);
  std::size_t unit_at_u = 0;
  for (EdgeEnd e : ends_at(s.graph(), "u")) unit_at_u += s.graph().label(e) == 1;
  CHECK(unit_at_u == 2);
  CHECK(check_invariants(s).ok());

  CHECK(code_of([&] { slide(s, {"e1", Side::A}, {"e1", Side::B}); }) == ErrorCode::SameEdge);
  CHECK(code_of([&] { slide(MarkedState::seed(loop(2, 6)), {"e1", Side::A}, {"e1", Side::B}); }) ==
        ErrorCode::SameEdge);
  const MarkedState two = MarkedState::seed(parse_graph("edge e a 2 3 b\nedge f a 4 5 c\n"));
  CHECK(code_of([&] { slide(two, {"e", Side::A}, {"f", Side::A}); }) == ErrorCode::NotDivisible);
  CHECK(code_of([&] { slide(two, {"e", Side::B}, {"f", Side::A}); }) == ErrorCode::DifferentOrigin);
}

TEST_CASE("slide across an equal-label loop keeps the graph", "[moves]") {
  const MarkedState s = MarkedState::seed(parse_graph("edge l x 2 2 x\nedge e x 2 3 y\n"));
  const MarkedState t = slide(s, {"e", Side::A}, {"l", Side::A});
  CHECK(serialize(t.graph()) == serialize(s.graph()));
  CHECK(check_invariants(t).ok());
  CHECK(fingerprint(t, 4) != fingerprint(s, 4));
}

TEST_CASE("induction", "[moves]") {
  const MarkedState s = MarkedState::seed(loop(1, 4));
  const MarkedState t = induct(s, 2);
  CHECK(serialize(t.graph()) == serialize(s.graph()));
  CHECK(check_invariants(t).ok());
  // The old vertex generator is t^-1 y^2 t in the new group.
  const Presentation& p = t.presentation();
  CHECK(format_word(p, p.to_generator_word(t.marking()[0])) == "t_e1^-1 x_v^2 t_e1");

  const MarkedState same = induct(s, 1);
  CHECK(same.marking()[0] == s.marking()[0]);
  CHECK(same.marking()[1] == s.marking()[1]);

  CHECK(code_of([] { induct(MarkedState::seed(loop(2, 6)), 2); }) == ErrorCode::NotAscending);
  CHECK(code_of([&] { induct(s, 3); }) == ErrorCode::NotDivisor);
}

TEST_CASE("move enumeration", "[moves]") {
  MoveBounds b;
  const auto bs26 = enumerate_moves(MarkedState::seed(loop(2, 6)), b);
  CHECK(count_kind<Slide>(bs26) == 0);
  CHECK(count_kind<Collapse>(bs26) == 0);
  std::set<std::vector<NamedEnd>> p2;
  for (const auto& m : bs26)
    if (auto* e = std::get_if<Expansion>(&m); e && e->p == 2) p2.insert(e->moved);
  CHECK(p2 == std::set<std::vector<NamedEnd>>{{}, {{"e1", Side::A}}, {{"e1", Side::B}}, {{"e1", Side::A}, {"e1", Side::B}}});

  std::vector<Label> d;
  for (const auto& m : enumerate_moves(MarkedState::seed(loop(1, 5)), b))
    if (auto* i = std::get_if<Induction>(&m)) d.push_back(i->d);
  CHECK(d == std::vector<Label>{1, 5});

  const auto free = enumerate_moves(MarkedState::seed(parse_graph("edge e a 2 3 b\nedge f b 5 7 c\n")), b);
  CHECK(count_kind<Slide>(free) == 0);
  CHECK(count_kind<Collapse>(free) == 0);
}

TEST_CASE("move syntax round trip", "[moves]") {
  const std::vector<Move> moves = {Collapse{"d"}, Expansion{"v", 2, {{"e1", Side::B}}}, Slide{{"e1", Side::A}, {"d", Side::B}},
                                   Induction{3}};
  for (const auto& m : moves) CHECK(parse_move(to_string(m)) == m);
  CHECK(to_string(moves[2]) == "slide e1.A across d.B");
  CHECK_THROWS_AS(parse_move("twist e1"), Error);
}

TEST_CASE("random move sequences keep the marking sound", "[moves][property]") {
  std::mt19937 rng(99);
  MoveBounds b;
  b.max_edges = 5;
  for (int run = 0; run < 150; ++run) {
    MarkedState s = MarkedState::seed(testing::random_graph(rng, 1 + rng() % 3, 6));
    const std::size_t v0 = s.graph().vertex_count(), e0 = s.graph().edge_count();
    for (int k = 0; k < 5; ++k) {
      const auto moves = enumerate_moves(s, b);
      if (moves.empty()) break;
      const Move m = moves[rng() % moves.size()];
      const MarkedState t = gbsr::apply(s, m);
      const long dv = static_cast<long>(t.graph().vertex_count()) - static_cast<long>(s.graph().vertex_count());
      const long de = static_cast<long>(t.graph().edge_count()) - static_cast<long>(s.graph().edge_count());
      if (std::holds_alternative<Collapse>(m)) CHECK((dv == -1 && de == -1));
      if (std::holds_alternative<Expansion>(m)) CHECK((dv == 1 && de == 1));
      if (std::holds_alternative<Slide>(m) || std::holds_alternative<Induction>(m)) CHECK((dv == 0 && de == 0));
      CHECK(check_invariants(t).ok());
      CHECK(modulus_fingerprint(t) == std::vector<Rational>(s.seed_moduli().begin(), s.seed_moduli().end()));
      s = t;
    }
    CHECK(static_cast<long>(s.graph().edge_count()) - static_cast<long>(e0) ==
          static_cast<long>(s.graph().vertex_count()) - static_cast<long>(v0));
    CHECK(apply_all(MarkedState::seed(s.seed_presentation().graph()), s.history()).marking().size() == s.marking().size());
  }
}
