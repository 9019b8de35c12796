#pragma once

// Elements of the fundamental group of a GBS graph of groups, written as
// edge paths with vertex-group powers interleaved, plus Britton/amalgam
// reduction and translation lengths on the Bass-Serre tree.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gbsr/graph.hpp"

namespace gbsr {

using Exponent = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// One traversal of an edge. Sign +1 runs from end B to end A and is the
// stable letter t_e of a non-tree edge; sign -1 runs from end A to end B.
struct EdgeLetter {
  EdgeId edge = 0;
  int sign = 1;

  constexpr Side arrival() const noexcept { return sign > 0 ? Side::A : Side::B; }
  constexpr Side departure() const noexcept { return sign > 0 ? Side::B : Side::A; }
  constexpr EdgeLetter inverse() const noexcept { return {edge, -sign}; }
  friend constexpr bool operator==(const EdgeLetter&, const EdgeLetter&) = default;
};

// powers[0] letters[0] powers[1] ... letters[n-1] powers[n], where powers[i]
// is an exponent of the generator of the vertex reached after i letters.
struct PathWord {
  VertexId start = 0;
  VertexId finish = 0;
  std::vector<Exponent> powers{Exponent(0)};
  std::vector<EdgeLetter> letters;

  static PathWord identity(VertexId v);
  static PathWord power(VertexId v, Exponent k);
  static PathWord step(const Graph& g, EdgeLetter letter);

  // Concatenation; `tail` must start where this word finishes.
  PathWord& append(const PathWord& tail);
  PathWord inverse() const;

  bool is_closed() const noexcept { return start == finish; }
  bool is_trivial() const { return letters.empty() && powers.front() == 0; }
  std::size_t edge_length() const noexcept { return letters.size(); }

  friend bool operator==(const PathWord&, const PathWord&) = default;
};

// Vertex carrying powers[i].
VertexId vertex_at(const Graph& g, const PathWord& w, std::size_t i);

// Repeatedly replaces pinches (a letter, a power divisible by the label at the
// letter's arrival end, the inverse letter) by the transported power until
// none remain. The result represents the same element.
PathWord reduce(const Graph& g, const PathWord& w);
// Appends `tail` to the reduced word `acc`, keeping it reduced.
PathWord& append_reduced(const Graph& g, PathWord& acc, const PathWord& tail);

// Translation length of a closed path word: the number of edge letters left
// after reducing and then cyclically reducing. Zero iff elliptic.
std::size_t translation_length(const Graph& g, const PathWord& w);
bool is_elliptic(const Graph& g, const PathWord& w);

// Modular homomorphism: product over letters of
// label(departure end) / label(arrival end).
Rational modulus(const Graph& g, const PathWord& w);

// ---------------------------------------------------------------------------

enum class GeneratorKind : std::uint8_t { Vertex, Stable };

struct Generator {
  GeneratorKind kind = GeneratorKind::Vertex;
  std::size_t index = 0;  // VertexId or EdgeId
  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

struct Syllable {
  Generator generator;
  Exponent exponent;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct GeneratorWord {
  std::vector<Syllable> syllables;

  GeneratorWord& append(const GeneratorWord& tail);
  // Appends g^k, merging with a trailing syllable in g and dropping zeros.
  GeneratorWord& push(Generator g, const Exponent& k);
  GeneratorWord inverse() const;
  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

// Presentation of the fundamental group read off a breadth-first spanning
// tree rooted at the least vertex. A tree edge e = v(p)-(q)w identifies
// x_v^p = x_w^q; a non-tree edge adds t_e x_v^p t_e^-1 = x_w^q, with v at end A.
class Presentation {
 public:
  explicit Presentation(std::shared_ptr<const Graph> graph);
  explicit Presentation(Graph graph);

  const Graph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const noexcept { return graph_; }
  VertexId basepoint() const noexcept { return 0; }
  bool is_tree_edge(EdgeId e) const { return tree_edge_.at(e); }

  // Vertex generators in vertex order, then stable letters in edge order.
  std::span<const Generator> generators() const noexcept { return generators_; }
  std::size_t generator_index(Generator g) const;
  std::string symbol(Generator g) const;
  std::optional<Generator> find_generator(std::string_view symbol) const;

  // Spanning-tree path from the basepoint to v.
  const PathWord& path_from_base(VertexId v) const { return tree_paths_.at(v); }
  // Reduced spanning-tree path from `from` to `to`.
  PathWord tree_path(VertexId from, VertexId to) const;

  PathWord generator_path(Generator g) const;
  PathWord to_path_word(const GeneratorWord& w) const;
  // Inverse of to_path_word on closed words based at the basepoint: tree
  // letters vanish, vertex powers become x_v powers, other letters t_e^+-1.
  GeneratorWord to_generator_word(const PathWord& w) const;

  // One relator per edge, in edge order; each is trivial in the group.
  std::vector<GeneratorWord> relators() const;

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<bool> tree_edge_;
  std::vector<PathWord> tree_paths_;
  std::vector<Generator> generators_;
};

// Whitespace-separated tokens x_<vertex> or t_<edge>, each with an optional
// ^<int>. Throws UnknownGenerator or SyntaxError.
GeneratorWord parse_word(const Presentation& p, std::string_view text);
std::string format_word(const Presentation& p, const GeneratorWord& w);
std::string format_path(const Graph& g, const PathWord& w);

}  // namespace gbsr
