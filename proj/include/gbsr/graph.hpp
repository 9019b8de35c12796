#pragma once

// Labelled multigraphs describing GBS graphs of groups: every vertex and edge
// group is infinite cyclic, and each edge end records the index of the edge
// group in the adjacent vertex group.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbsr/errors.hpp"

namespace gbsr {

using Label = std::uint64_t;

// Indices into a Graph. Vertices and edges are stored sorted by name, so
// index order is the deterministic id order.
using VertexId = std::size_t;
using EdgeId = std::size_t;

enum class Side : std::uint8_t { A = 0, B = 1 };

constexpr Side opposite(Side s) noexcept { return s == Side::A ? Side::B : Side::A; }
constexpr std::size_t side_index(Side s) noexcept { return static_cast<std::size_t>(s); }
constexpr char side_char(Side s) noexcept { return s == Side::A ? 'A' : 'B'; }

struct EdgeEnd {
  EdgeId edge = 0;
  Side side = Side::A;

  constexpr EdgeEnd other() const noexcept { return {edge, opposite(side)}; }
  friend constexpr auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

struct EndRecord {
  VertexId vertex = 0;
  Label label = 1;
  friend constexpr bool operator==(const EndRecord&, const EndRecord&) = default;
};

struct Edge {
  std::string name;
  std::array<EndRecord, 2> ends;

  const EndRecord& at(Side s) const noexcept { return ends[side_index(s)]; }
  bool is_loop() const noexcept { return ends[0].vertex == ends[1].vertex; }
};

// Unvalidated description of a graph, in terms of names. Labels are signed so
// that a non-positive label can be represented and rejected.
struct EdgeSpec {
  std::string name;
  std::string from;
  std::int64_t label_from = 1;
  std::int64_t label_to = 1;
  std::string to;
};

struct GraphSpec {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
};

// Returns the first violated invariant, or nullopt when `spec` describes a
// valid graph. Edge endpoints must be listed among `vertices`.
std::optional<Error> validate(const GraphSpec& spec);

class Graph {
 public:
  // Throws Error with the code reported by validate().
  static Graph create(const GraphSpec& spec);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  VertexId vertex_or_throw(std::string_view name) const;
  EdgeId edge_or_throw(std::string_view name) const;

  VertexId origin(EdgeEnd end) const { return edges_.at(end.edge).at(end.side).vertex; }
  Label label(EdgeEnd end) const { return edges_.at(end.edge).at(end.side).label; }

  // All ends whose origin is v, ordered by (edge, side); a loop contributes
  // both of its ends.
  std::span<const EdgeEnd> ends_at(VertexId v) const { return incident_.at(v); }

  Label max_label() const noexcept;
  // Rank of the fundamental group of the underlying graph.
  std::size_t betti_number() const noexcept { return edges_.size() + 1 - vertices_.size(); }

  GraphSpec spec() const;

  std::string end_name(EdgeEnd end) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeEnd>> incident_;
};

// Name-based lookup used by the CLI. Throws UnknownVertex.
std::vector<EdgeEnd> ends_at(const Graph& g, std::string_view vertex);

// Parses "<edge>.<A|B>". Throws SyntaxError or UnknownEdge.
EdgeEnd parse_end(const Graph& g, std::string_view text);

// Line-oriented text format:
//   vertex <name>
//   edge <name> <v> <labelAtV> <labelAtW> <w>
// '#' starts a comment. Vertices mentioned only by edges are declared
// implicitly. Errors carry the offending line number.
Graph parse_graph(std::string_view text);
std::string serialize(const Graph& g);
std::string to_dot(const Graph& g);

// Canonical key of the labelled multigraph: equal iff the graphs are
// isomorphic (vertex bijection, edge bijection, edges may swap their ends).
std::string canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// Vertex order realising the canonical key: order[i] is the vertex placed at
// canonical position i.
std::vector<VertexId> canonical_order(const Graph& g);

}  // namespace gbsr
