#include "gbsr/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gbsr {

namespace {

bool connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& links) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (auto [a, b] : links) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

std::optional<Error> validate(const GraphSpec& spec) {
  if (spec.vertices.empty()) return Error(ErrorCode::EmptyGraph, "a graph needs at least one vertex");

  std::map<std::string, std::size_t> index;
  for (const auto& v : spec.vertices) {
    if (!index.emplace(v, index.size()).second)
      return Error(ErrorCode::DuplicateName, "vertex '" + v + "' declared twice");
  }
  std::set<std::string> edge_names;
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (const auto& e : spec.edges) {
    if (!edge_names.insert(e.name).second)
      return Error(ErrorCode::DuplicateName, "edge '" + e.name + "' declared twice");
    auto from = index.find(e.from);
    auto to = index.find(e.to);
    if (from == index.end()) return Error(ErrorCode::UnknownVertex, "edge '" + e.name + "' uses '" + e.from + "'");
    if (to == index.end()) return Error(ErrorCode::UnknownVertex, "edge '" + e.name + "' uses '" + e.to + "'");
    if (e.label_from < 1 || e.label_to < 1)
      return Error(ErrorCode::NonPositiveLabel, "edge '" + e.name + "' has a label below 1");
    links.emplace_back(from->second, to->second);
  }
  if (!connected(spec.vertices.size(), links))
    return Error(ErrorCode::Disconnected, "the underlying graph is not connected");
  return std::nullopt;
}

Graph Graph::create(const GraphSpec& spec) {
  if (auto err = validate(spec)) throw *err;

  Graph g;
  g.vertices_ = spec.vertices;
  std::sort(g.vertices_.begin(), g.vertices_.end());

  std::vector<const EdgeSpec*> order;
  for (const auto& e : spec.edges) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->name < b->name; });

  for (const EdgeSpec* e : order) {
    Edge edge;
    edge.name = e->name;
    edge.ends[0] = {*g.find_vertex(e->from), static_cast<Label>(e->label_from)};
    edge.ends[1] = {*g.find_vertex(e->to), static_cast<Label>(e->label_to)};
    g.edges_.push_back(std::move(edge));
  }

  g.incident_.assign(g.vertices_.size(), {});
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    for (Side s : {Side::A, Side::B}) g.incident_[g.edges_[e].at(s).vertex].push_back({e, s});
  }
  return g;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), name,
                             [](const Edge& e, std::string_view n) { return e.name < n; });
  if (it == edges_.end() || it->name != name) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

VertexId Graph::vertex_or_throw(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "no vertex named '" + std::string(name) + "'");
}

EdgeId Graph::edge_or_throw(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw Error(ErrorCode::UnknownEdge, "no edge named '" + std::string(name) + "'");
}

Label Graph::max_label() const noexcept {
  Label best = 1;
  for (const auto& e : edges_) best = std::max({best, e.ends[0].label, e.ends[1].label});
  return best;
}

GraphSpec Graph::spec() const {
  GraphSpec s;
  s.vertices = vertices_;
  for (const auto& e : edges_) {
    s.edges.push_back({e.name, vertices_[e.ends[0].vertex], static_cast<std::int64_t>(e.ends[0].label),
                       static_cast<std::int64_t>(e.ends[1].label), vertices_[e.ends[1].vertex]});
  }
  return s;
}

std::string Graph::end_name(EdgeEnd end) const { return edge(end.edge).name + "." + side_char(end.side); }

std::vector<EdgeEnd> ends_at(const Graph& g, std::string_view vertex) {
  auto ends = g.ends_at(g.vertex_or_throw(vertex));
  return {ends.begin(), ends.end()};
}

EdgeEnd parse_end(const Graph& g, std::string_view text) {
  auto dot = text.rfind('.');
  if (dot == std::string_view::npos || dot + 2 != text.size() || (text.back() != 'A' && text.back() != 'B'))
    throw Error(ErrorCode::SyntaxError, "expected <edge>.<A|B>, got '" + std::string(text) + "'");
  return {g.edge_or_throw(text.substr(0, dot)), text.back() == 'A' ? Side::A : Side::B};
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

using EdgeTuple = std::array<std::uint64_t, 4>;

std::vector<EdgeTuple> encode(const Graph& g, const std::vector<std::size_t>& position) {
  std::vector<EdgeTuple> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    EdgeTuple t{position[e.ends[0].vertex], e.ends[0].label, position[e.ends[1].vertex], e.ends[1].label};
    if (std::pair(t[2], t[3]) < std::pair(t[0], t[1])) t = {t[2], t[3], t[0], t[1]};
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Search {
  std::vector<EdgeTuple> best;
  std::vector<VertexId> best_order;
};

Search canonical_search(const Graph& g) {
  const std::size_t n = g.vertex_count();

  // Isomorphism-invariant vertex signature: sorted (label, is-loop, label at
  // the other end) over incident ends. Only orders compatible with the
  // sorted signatures are tried.
  using Signature = std::vector<std::array<std::uint64_t, 3>>;
  std::vector<Signature> sig(n);
  for (VertexId v = 0; v < n; ++v) {
    for (EdgeEnd end : g.ends_at(v)) {
      const Edge& e = g.edge(end.edge);
      sig[v].push_back({g.label(end), e.is_loop() ? 1u : 0u, g.label(end.other())});
    }
    std::sort(sig[v].begin(), sig[v].end());
  }
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return sig[a] < sig[b]; });

  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) of equal signatures
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && sig[order[j]] == sig[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  Search s;
  std::vector<std::size_t> position(n);
  bool first = true;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
    auto code = encode(g, position);
    if (first || code < s.best) {
      s.best = std::move(code);
      s.best_order = order;
      first = false;
    }
    // Odometer over per-block permutations.
    std::size_t b = blocks.size();
    while (b > 0) {
      --b;
      auto [lo, hi] = blocks[b];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
      if (b == 0) return s;
    }
    if (blocks.empty()) return s;
  }
}

}  // namespace

std::string canonical_form(const Graph& g) {
  auto s = canonical_search(g);
  std::string key = std::to_string(g.vertex_count()) + "|";
  for (const auto& t : s.best) {
    key += std::to_string(t[0]) + ":" + std::to_string(t[1]) + "-" + std::to_string(t[2]) + ":" +
           std::to_string(t[3]) + ";";
  }
  return key;
}

std::vector<VertexId> canonical_order(const Graph& g) { return canonical_search(g).best_order; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace gbsr
