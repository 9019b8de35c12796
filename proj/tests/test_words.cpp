#include <random>

#include "catch_amalgamated.hpp"
#include "gbsr/words.hpp"
#include "support.hpp"

using namespace gbsr;
using testing::length_of;
using testing::loop;

namespace {

const Graph& bs12() {
  static const Graph g = loop(1, 2);
  return g;
}

PathWord word(VertexId v, std::vector<int> powers, std::vector<EdgeLetter> letters) {
  PathWord w;
  w.start = w.finish = v;
  w.powers.assign(powers.begin(), powers.end());
  w.letters = std::move(letters);
  return w;
}

// Independent reducer: rescans from the left after every pinch.
PathWord naive_reduce(const Graph& g, PathWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
      const EdgeLetter a = w.letters[i], b = w.letters[i + 1];
      if (b != a.inverse()) continue;
      const Label arr = g.edge(a.edge).at(a.arrival()).label;
      const Label dep = g.edge(a.edge).at(a.departure()).label;
      if (w.powers[i + 1] % arr != 0) continue;
      const Exponent merged = w.powers[i] + w.powers[i + 1] / arr * dep + w.powers[i + 2];
      w.letters.erase(w.letters.begin() + static_cast<std::ptrdiff_t>(i), w.letters.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      w.powers.erase(w.powers.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.powers.begin() + static_cast<std::ptrdiff_t>(i) + 3);
      w.powers[i] = merged;
      changed = true;
      break;
    }
  }
  return w;
}

// Conjugates by the leading power and first letter.
PathWord rotate(const PathWord& w) {
  PathWord r;
  r.powers.assign(w.powers.begin() + 1, w.powers.end());
  r.powers.back() += w.powers.front();
  r.letters.assign(w.letters.begin() + 1, w.letters.end());
  r.letters.push_back(w.letters.front());
  r.powers.push_back(0);
  return r;
}

std::size_t naive_length(const Graph& g, PathWord w) {
  w = naive_reduce(g, w);
  bool shrunk = true;
  while (shrunk && !w.letters.empty()) {
    shrunk = false;
    PathWord r = w;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
      r = naive_reduce(g, rotate(r));
      if (r.letters.size() < w.letters.size()) {
        w = r;
        shrunk = true;
        break;
      }
      if (r.letters.empty()) break;
    }
  }
  return w.letters.size();
}

}  // namespace

TEST_CASE("presentations", "[words]") {
  Presentation p(bs12());
  REQUIRE(p.generators().size() == 2);
  CHECK(p.symbol(p.generators()[0]) == "x_v");
  CHECK(p.symbol(p.generators()[1]) == "t_e1");
  const auto rel = p.relators();
  REQUIRE(rel.size() == 1);
  CHECK(format_word(p, rel[0]) == "t_e1 x_v t_e1^-1 x_v^-2");

  Presentation seg(parse_graph("edge e a 2 3 b\n"));
  REQUIRE(seg.generators().size() == 2);
  CHECK(format_word(seg, seg.relators()[0]) == "x_a^2 x_b^-3");

  Presentation bs26(loop(2, 6));
  CHECK(format_word(bs26, bs26.relators()[0]) == "t_e1 x_v^2 t_e1^-1 x_v^-6");
}

TEST_CASE("relators reduce to the identity", "[words]") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Presentation p(testing::random_graph(rng, 1 + rng() % 4, 6));
    for (const auto& r : p.relators()) CHECK(reduce(p.graph(), p.to_path_word(r)).is_trivial());
  }
}

TEST_CASE("path words of generators", "[words]") {
  Presentation p(bs12());
  const PathWord x3 = p.to_path_word(parse_word(p, "x_v^3"));
  CHECK(x3.letters.empty());
  CHECK(x3.powers == std::vector<Exponent>{3});
  const PathWord t = p.to_path_word(parse_word(p, "t_e1"));
  REQUIRE(t.letters.size() == 1);
  CHECK(t.letters[0] == EdgeLetter{0, 1});

  Presentation seg(parse_graph("edge e a 2 3 b\n"));
  const PathWord xb = seg.to_path_word(parse_word(seg, "x_b"));
  REQUIRE(xb.letters.size() == 2);
  CHECK(xb.letters[0].inverse() == xb.letters[1]);
  CHECK(xb.powers == std::vector<Exponent>{0, 1, 0});
  CHECK(seg.to_generator_word(xb) == parse_word(seg, "x_b"));

  CHECK_THROWS_AS(parse_word(p, "y_q"), Error);
  CHECK_THROWS_AS(parse_word(p, "x_v^"), Error);
}

TEST_CASE("pinches", "[words]") {
  const EdgeLetter t{0, 1};
  CHECK(reduce(bs12(), word(0, {0, 1, 0}, {t, t.inverse()})) == word(0, {2}, {}));
  CHECK(reduce(bs12(), word(0, {0, 2, 0}, {t.inverse(), t})) == word(0, {1}, {}));
  CHECK(reduce(bs12(), word(0, {0, 1, 0}, {t.inverse(), t})) == word(0, {0, 1, 0}, {t.inverse(), t}));
  // Nested pinch t (t x t^-1) t^-1 = t x^2 t^-1 = x^4.
  CHECK(reduce(bs12(), word(0, {0, 0, 1, 0, 0}, {t, t, t.inverse(), t.inverse()})) == word(0, {4}, {}));
}

TEST_CASE("translation lengths", "[words]") {
  Presentation p(bs12());
  CHECK(length_of(p, parse_word(p, "t_e1")) == 1);
  CHECK(length_of(p, parse_word(p, "x_v")) == 0);
  CHECK(is_elliptic(bs12(), p.to_path_word(parse_word(p, "t_e1 x_v t_e1^-1"))));
  CHECK_FALSE(is_elliptic(bs12(), p.to_path_word(parse_word(p, "t_e1"))));

  Presentation seg(parse_graph("edge e a 2 3 b\n"));
  CHECK(length_of(seg, parse_word(seg, "x_a x_b")) == 2);
  CHECK(length_of(seg, parse_word(seg, "x_a^2 x_b")) == 0);
  CHECK(length_of(seg, parse_word(seg, "x_a x_b x_a x_b^-1")) == 4);
}

TEST_CASE("stack reduction agrees with a naive reducer", "[words][property]") {
  std::mt19937 rng(42);
  for (int i = 0; i < 400; ++i) {
    const Presentation p(testing::random_graph(rng, 1 + rng() % 3, 6));
    const GeneratorWord w = testing::random_word(rng, p, 1 + rng() % 7);
    const PathWord raw = p.to_path_word(w);
    const PathWord fast = reduce(p.graph(), raw);
    CHECK(fast == naive_reduce(p.graph(), raw));
    CHECK(translation_length(p.graph(), raw) == naive_length(p.graph(), raw));
  }
}

TEST_CASE("elliptic elements of a random graph", "[words][property]") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Presentation p(testing::random_graph(rng, 1 + rng() % 3, 6));
    const GeneratorWord w = testing::random_word(rng, p, 4);
    for (VertexId v = 0; v < p.graph().vertex_count(); ++v) {
      GeneratorWord c = w;
      c.push(Generator{GeneratorKind::Vertex, v}, Exponent(1 + rng() % 5)).append(w.inverse());
      CHECK(is_elliptic(p.graph(), p.to_path_word(c)));
    }
  }
}

TEST_CASE("modulus", "[words]") {
  Presentation p(loop(2, 6));
  CHECK(modulus(p.graph(), p.to_path_word(parse_word(p, "t_e1"))) == Rational(6, 2));
  CHECK(modulus(p.graph(), p.to_path_word(parse_word(p, "t_e1^-2 x_v"))) == Rational(1, 9));
  CHECK(modulus(p.graph(), p.to_path_word(parse_word(p, "x_v^5"))) == 1);
}

TEST_CASE("generator words", "[words]") {
  Presentation p(loop(2, 6));
  GeneratorWord w = parse_word(p, "x_v x_v^2 t_e1 t_e1^-1");
  CHECK(format_word(p, w) == "x_v^3");
  CHECK(format_word(p, w.inverse()) == "x_v^-3");
  CHECK(format_word(p, parse_word(p, "")) == "");
}
