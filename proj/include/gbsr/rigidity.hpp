#pragma once

// Rigidity of the Bass-Serre tree of a GBS graph. Vertex groups are infinite
// cyclic, so containment of edge groups at a vertex is divisibility of end
// labels and every tree-level pair of edges at a vertex is seen on the
// quotient as a pair of edge ends.

#include <optional>
#include <string>
#include <vector>

#include "gbsr/graph.hpp"

namespace gbsr {

enum class ViolationKind {
  Collapsible,   // a non-loop end labelled 1 (the graph is not reduced)
  Slide,         // the two ends lie on different edges: a slide is available
  ExpandSlide,   // the two ends of one loop with strictly dividing labels
  Induction,     // ascending loop whose index-d subgroup gives another tree
};

std::string_view to_string(ViolationKind k) noexcept;

struct Violation {
  VertexId vertex = 0;
  EdgeEnd e;  // the end whose edge group is contained in f's
  EdgeEnd f;
  ViolationKind kind = ViolationKind::Slide;
  Label divisor = 0;  // for Induction
};

struct RigidityVerdict {
  bool reduced = false;
  bool ascending = false;
  bool strongly_slide_free = false;
  bool rigid = false;
  std::vector<Violation> violations;
  std::optional<EdgeEnd> collapse_witness;
};

// Reduced iff every end labelled 1 lies on a loop. Returns the first
// offending end, if any.
std::optional<EdgeEnd> collapse_witness(const Graph& g);
bool is_reduced(const Graph& g);

// One vertex, one loop, an end labelled 1. Throws NotReduced.
bool is_ascending(const Graph& g);

// The label n of an ascending loop (1, n), if g is one.
std::optional<Label> ascending_index(const Graph& g);

// No vertex carries two distinct ends E != F with label(F) | label(E).
// Returns the first such (E, F) pair when the graph is not slide-free.
std::optional<std::pair<EdgeEnd, EdgeEnd>> divisibility_witness(const Graph& g);
bool is_strongly_slide_free(const Graph& g);

// Ordered pairs (E, F) at a vertex with label(F) | label(E) that are not
// excused: E, F the two ends of one loop with equal labels; or F on a loop
// whose ends are both labelled 1 at a vertex with exactly three ends.
// Throws NotReduced or AscendingCase.
RigidityVerdict edge_pair_rigid(const Graph& g);

// The ascending loop (1, n) is rigid iff n = 1 or n is prime.
bool ascending_rigid(Label n);
// The same criterion stated through subgroup equivalence: every divisor of n
// is a power of n.
bool divisors_are_powers(Label n);

// Full verdict for any valid graph.
RigidityVerdict check(const Graph& g);

std::string describe(const Graph& g, const RigidityVerdict& v);

}  // namespace gbsr
