#pragma once

// Brute-force exploration of a deformation space: bounded breadth-first
// search over moves, reduced states classified by quotient graph and by
// translation lengths of a fixed sample of seed words. Independent of the
// rigidity criteria it is used to cross-check.

#include <cstddef>
#include <optional>
#include <vector>

#include "gbsr/graph.hpp"
#include "gbsr/moves.hpp"

namespace gbsr {

struct ExploreBounds {
  std::size_t max_extra_edges = 2;
  Label max_label = 0;  // 0: square of the largest seed label
  std::size_t max_depth = 8;
  std::size_t radius = 4;
  std::size_t ascending_bound = 8;
};

ExploreBounds default_bounds(const Graph& seed);

enum class Empirical { Yes, No, Inconclusive };
std::string_view to_string(Empirical e) noexcept;

struct StateClass {
  Graph graph;
  std::vector<std::size_t> fingerprint;
  std::vector<Move> moves;  // from the seed to the representative
  std::size_t count = 0;    // reduced states seen in this class
};

struct ExploreReport {
  std::vector<StateClass> classes;
  Empirical rigid = Empirical::Inconclusive;
  std::vector<Move> witness;
  bool ascending = false;
  bool bounds_hit = false;
  std::size_t states_expanded = 0;
  std::size_t transitions = 0;
};

// Collapses (first collapsible edge in edge order) until reduced.
MarkedState reduce_state(const MarkedState& s);

// Freely reduced words of length 1..radius over the generators of `seed`
// and their inverses, in shortlex order.
std::vector<GeneratorWord> sample_words(const Presentation& seed, std::size_t radius);

// Translation lengths of the sample words through the marking.
std::vector<std::size_t> fingerprint(const MarkedState& s, std::size_t radius);

// Throws BoundsTooTight when the seed itself lies outside the bounds.
ExploreReport explore(const MarkedState& seed, const ExploreBounds& bounds);
ExploreReport explore(const Graph& seed);

// Move sequence from a reduced, non-ascending, non-rigid seed to a reduced
// state on a different tree, built from the first violating pair: a slide
// (across the loop's other end when the plain slide leaves a unit label),
// or an expansion followed by three slides for a loop whose labels strictly
// divide. Throws NoViolation for rigid seeds, AscendingCase for ascending
// ones.
std::vector<Move> witness_search(const MarkedState& seed);

// Whether induction with parameter d on the loop (1, n) returns the same
// tree: some i, j <= bound with n^i = n^j * d.
bool ascending_equivalent(Label n, Label d, std::size_t bound);

// Connected graphs with exactly `edges` edges and labels in 1..max_label, one
// per isomorphism class, sorted by canonical form.
std::vector<Graph> enumerate_graphs(std::size_t edges, Label max_label);

}  // namespace gbsr
