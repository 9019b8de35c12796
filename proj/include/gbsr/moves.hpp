#pragma once

// Deformation moves on marked GBS graphs. A marked state keeps, for every
// generator of the seed presentation, a word in the current graph
// representing the same group element, so the group identification stays
// exact through any sequence of moves.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gbsr/graph.hpp"
#include "gbsr/words.hpp"

namespace gbsr {

// Edge ends are addressed by name so moves can be replayed on any state
// that carries the same names.
struct NamedEnd {
  std::string edge;
  Side side = Side::A;
  friend auto operator<=>(const NamedEnd&, const NamedEnd&) = default;
};

struct Collapse {
  std::string edge;
  friend bool operator==(const Collapse&, const Collapse&) = default;
};
struct Expansion {
  std::string vertex;
  Label p = 1;
  std::vector<NamedEnd> moved;
  friend bool operator==(const Expansion&, const Expansion&) = default;
};
struct Slide {
  NamedEnd moving;
  NamedEnd across;
  friend bool operator==(const Slide&, const Slide&) = default;
};
struct Induction {
  Label d = 1;
  friend bool operator==(const Induction&, const Induction&) = default;
};

using Move = std::variant<Collapse, Expansion, Slide, Induction>;

// CLI syntax: "collapse e", "expand v p [e.A ...]", "slide e.A across f.B",
// "induct d".
std::string to_string(const Move& m);
std::string to_string(const NamedEnd& e);
Move parse_move(std::string_view text);

NamedEnd named(const Graph& g, EdgeEnd end);
EdgeEnd resolve(const Graph& g, const NamedEnd& end);

class MarkedState {
 public:
  static MarkedState seed(Graph g);

  const Graph& graph() const noexcept { return current_->graph(); }
  const Presentation& presentation() const noexcept { return *current_; }
  const Presentation& seed_presentation() const noexcept { return *seed_->presentation; }

  // One reduced closed path word per seed generator, in seed generator order,
  // based at the current basepoint.
  std::span<const PathWord> marking() const noexcept { return marking_; }
  std::vector<GeneratorWord> marking_words() const;

  // Reduced image of a word over the seed generators.
  PathWord image(const GeneratorWord& seed_word) const;

  const std::vector<Move>& history() const noexcept { return history_; }

  // Modular homomorphism of the seed evaluated on the seed generators.
  std::span<const Rational> seed_moduli() const noexcept { return seed_->moduli; }
  std::size_t seed_betti_number() const noexcept { return seed_->betti; }

 private:
  struct Seed {
    std::shared_ptr<const Presentation> presentation;
    std::vector<Rational> moduli;
    std::size_t betti = 0;
  };

  friend class StateBuilder;

  std::shared_ptr<const Seed> seed_;
  std::shared_ptr<const Presentation> current_;
  std::vector<PathWord> marking_;
  std::vector<Move> history_;
};

// Merges the endpoint whose label is 1 into the other endpoint (the B side
// when both labels are 1). Throws NotCollapsible.
MarkedState collapse(const MarkedState& s, std::string_view edge);
// Adds a vertex u and an edge v(p)-(1)u, reattaching `moved` at u with labels
// divided by p. Throws WrongOrigin, NotDivisible.
MarkedState expand(const MarkedState& s, std::string_view vertex, Label p, std::span<const NamedEnd> moved);
// Moves `moving` to the far vertex of `across`; its label becomes
// label(moving) / label(across) * label(far end of across).
// Throws DifferentOrigin, SameEdge, NotDivisible.
MarkedState slide(const MarkedState& s, const NamedEnd& moving, const NamedEnd& across);
// Re-bases a single (1, n) loop on the subgroup of index d. Throws
// NotAscending, NotDivisor.
MarkedState induct(const MarkedState& s, Label d);

MarkedState apply(const MarkedState& s, const Move& m);
MarkedState apply_all(MarkedState s, std::span<const Move> moves);

struct InvariantReport {
  bool relations_trivial = true;
  bool vertex_generators_elliptic = true;
  bool modulus_preserved = true;
  bool betti_preserved = true;

  bool ok() const noexcept {
    return relations_trivial && vertex_generators_elliptic && modulus_preserved && betti_preserved;
  }
};

InvariantReport check_invariants(const MarkedState& s);

// Modular homomorphism of the current graph evaluated on the marking, one
// value per seed generator; a deformation invariant of marked states.
std::vector<Rational> modulus_fingerprint(const MarkedState& s);

struct MoveBounds {
  std::size_t max_edges = 4;
  Label max_label = 36;
  Label max_expansion_divisor = 36;
  std::size_t max_moved_ends = 10;
};

// Legal collapses, slides, expansions (p >= 2) and inductions whose results
// stay inside `bounds`, in a deterministic order.
std::vector<Move> enumerate_moves(const MarkedState& s, const MoveBounds& bounds);

}  // namespace gbsr
