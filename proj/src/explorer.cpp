#include "gbsr/explorer.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "gbsr/kernels.hpp"
#include "gbsr/rigidity.hpp"

namespace gbsr {

std::string_view to_string(Empirical e) noexcept {
  switch (e) {
    case Empirical::Yes: return "yes";
    case Empirical::No: return "no";
    case Empirical::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ExploreBounds default_bounds(const Graph& seed) {
  ExploreBounds b;
  const Label m = seed.max_label();
  b.max_label = m * m;
  return b;
}

MarkedState reduce_state(const MarkedState& s) {
  MarkedState cur = s;
  while (auto w = collapse_witness(cur.graph())) cur = collapse(cur, cur.graph().edge(w->edge).name);
  return cur;
}

std::vector<GeneratorWord> sample_words(const Presentation& seed, std::size_t radius) {
  const auto gens = seed.generators();
  // Letters 2i and 2i+1 are generator i and its inverse.
  const std::size_t letters = 2 * gens.size();
  std::vector<GeneratorWord> out;
  std::vector<std::vector<std::size_t>> level{{}};
  for (std::size_t len = 1; len <= radius; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : level) {
      for (std::size_t a = 0; a < letters; ++a) {
        if (!w.empty() && (w.back() ^ 1u) == a) continue;
        auto v = w;
        v.push_back(a);
        GeneratorWord g;
        for (std::size_t x : v) g.push(gens[x / 2], Exponent(x % 2 == 0 ? 1 : -1));
        out.push_back(std::move(g));
        next.push_back(std::move(v));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<std::size_t> fingerprint(const MarkedState& s, std::size_t radius) {
  const auto words = sample_words(s.seed_presentation(), radius);
  return lengths_parallel(s, words);
}

namespace {

std::string exact_key(const MarkedState& s) {
  std::string key = serialize(s.graph());
  for (const auto& w : s.marking()) {
    key += format_path(s.graph(), w);
    key += '\n';
  }
  return key;
}

struct ClassRecord {
  std::string key;
  MarkedState state;
  std::optional<std::vector<std::size_t>> fp;
  std::size_t count = 1;
};

class Classifier {
 public:
  explicit Classifier(std::vector<GeneratorWord> sample) : sample_(std::move(sample)) {}

  // Records the reduction of `s`; returns true if it opened a new class.
  bool record(const MarkedState& s) {
    MarkedState r = reduce_state(s);
    std::string exact = exact_key(r);
    if (auto it = exact_.find(exact); it != exact_.end()) {
      ++classes_[it->second].count;
      return false;
    }
    std::string key = canonical_form(r.graph());
    std::vector<std::size_t> same_graph;
    for (std::size_t i = 0; i < classes_.size(); ++i)
      if (classes_[i].key == key) same_graph.push_back(i);
    if (same_graph.empty()) {
      exact_.emplace(std::move(exact), classes_.size());
      classes_.push_back({std::move(key), std::move(r), std::nullopt, 1});
      return true;
    }
    auto fp = lengths_serial(r, sample_);
    for (std::size_t i : same_graph) {
      auto& c = classes_[i];
      if (!c.fp) c.fp = lengths_serial(c.state, sample_);
      if (*c.fp == fp) {
        ++c.count;
        exact_.emplace(std::move(exact), i);
        return false;
      }
    }
    exact_.emplace(std::move(exact), classes_.size());
    classes_.push_back({std::move(key), std::move(r), std::move(fp), 1});
    return true;
  }

  std::vector<ClassRecord>& classes() { return classes_; }
  const std::vector<GeneratorWord>& sample() const { return sample_; }

 private:
  std::vector<GeneratorWord> sample_;
  std::vector<ClassRecord> classes_;
  std::unordered_map<std::string, std::size_t> exact_;
};

ExploreReport finish(Classifier& c, ExploreReport report) {
  for (auto& rec : c.classes()) {
    if (!rec.fp) rec.fp = lengths_serial(rec.state, c.sample());
    report.classes.push_back({rec.state.graph(), *rec.fp, rec.state.history(), rec.count});
  }
  std::sort(report.classes.begin(), report.classes.end(), [](const StateClass& a, const StateClass& b) {
    auto ka = canonical_form(a.graph), kb = canonical_form(b.graph);
    if (ka != kb) return ka < kb;
    return a.fingerprint < b.fingerprint;
  });
  return report;
}

ExploreReport explore_ascending(const MarkedState& reduced_seed, Label n, const ExploreBounds& bounds) {
  ExploreReport report;
  report.ascending = true;
  Classifier c(sample_words(reduced_seed.seed_presentation(), bounds.radius));
  c.record(reduced_seed);
  // Length functions here are |homomorphism| and cannot separate the
  // induced trees, so equivalence is decided arithmetically per divisor.
  for (Label d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    MarkedState s = induct(reduced_seed, d);
    ++report.transitions;
    if (ascending_equivalent(n, d, bounds.ascending_bound)) {
      ++c.classes().front().count;
      continue;
    }
    c.classes().push_back({canonical_form(s.graph()), s, std::nullopt, 1});
    if (report.witness.empty()) report.witness = s.history();
  }
  report.rigid = report.witness.empty() ? Empirical::Yes : Empirical::No;
  return finish(c, std::move(report));
}

}  // namespace

ExploreReport explore(const Graph& seed) { return explore(MarkedState::seed(seed), default_bounds(seed)); }

ExploreReport explore(const MarkedState& seed, const ExploreBounds& bounds_in) {
  ExploreBounds bounds = bounds_in;
  if (bounds.max_label == 0) bounds.max_label = default_bounds(seed.graph()).max_label;
  if (bounds.max_depth == 0 || bounds.radius == 0 || bounds.ascending_bound == 0)
    throw Error(ErrorCode::BoundsTooTight, "depth, radius and ascending bound must be positive");
  if (seed.graph().max_label() > bounds.max_label)
    throw Error(ErrorCode::BoundsTooTight, "seed label exceeds --max-label");

  MarkedState reduced_seed = reduce_state(seed);
  if (auto n = ascending_index(reduced_seed.graph())) return explore_ascending(reduced_seed, *n, bounds);

  MoveBounds mb;
  mb.max_edges = seed.graph().edge_count() + bounds.max_extra_edges;
  mb.max_label = bounds.max_label;
  mb.max_expansion_divisor = bounds.max_label;

  ExploreReport report;
  Classifier c(sample_words(seed.seed_presentation(), bounds.radius));
  c.record(seed);

  std::unordered_set<std::string> visited{canonical_form(seed.graph())};
  std::vector<MarkedState> frontier{seed};
  for (std::size_t depth = 0; depth < bounds.max_depth && !frontier.empty(); ++depth) {
    std::vector<MarkedState> next;
    for (const MarkedState& s : frontier) {
      ++report.states_expanded;
      for (const Move& m : enumerate_moves(s, mb)) {
        MarkedState t = gbsr::apply(s, m);
        ++report.transitions;
        if (c.record(t)) {
          if (c.classes().size() >= 2) {
            report.rigid = Empirical::No;
            report.witness = c.classes().back().state.history();
            return finish(c, std::move(report));
          }
        }
        if (visited.insert(canonical_form(t.graph())).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  report.bounds_hit = !frontier.empty();
  report.rigid = report.bounds_hit ? Empirical::Inconclusive : Empirical::Yes;
  return finish(c, std::move(report));
}

// ---------------------------------------------------------------------------

std::vector<Move> witness_search(const MarkedState& seed) {
  const Graph& g = seed.graph();
  RigidityVerdict v = edge_pair_rigid(g);
  if (v.rigid) throw Error(ErrorCode::NoViolation, "the seed satisfies the rigidity criterion");

  auto pick = [&](ViolationKind kind) -> const Violation* {
    for (const auto& x : v.violations)
      if (x.kind == kind) return &x;
    return nullptr;
  };

  MarkedState t = seed;
  if (const Violation* x = pick(ViolationKind::Slide)) {
    t = slide(seed, named(g, x->e), named(g, x->f));
    const EdgeEnd far = x->f.other();
    if (!is_reduced(t.graph()) && g.label(x->e) == g.label(x->f) && g.label(far) == 1) {
      // Slide across the translate of f-bar: the other end of the loop.
      t = slide(seed, named(g, x->e), named(g, far));
    }
  } else {
    const Violation* y = pick(ViolationKind::ExpandSlide);
    const Label p = g.label(y->f);
    const std::string vertex = g.vertex_name(y->vertex);
    t = expand(seed, vertex, p, {});
    // The new edge is the one not present in the seed.
    std::string d_name;
    for (const auto& e : t.graph().edges())
      if (!g.find_edge(e.name)) d_name = e.name;
    const NamedEnd d_at_v{d_name, Side::A};
    const NamedEnd d_at_u{d_name, Side::B};
    t = slide(t, named(g, y->e), d_at_v);
    t = slide(t, named(g, y->f), d_at_v);
    t = slide(t, d_at_u, named(g, y->f));
  }
  return reduce_state(t).history();
}

bool ascending_equivalent(Label n, Label d, std::size_t bound) {
  if (d == 0 || n % d != 0) throw Error(ErrorCode::NotDivisor, std::to_string(d) + " does not divide " + std::to_string(n));
  std::vector<Exponent> power{1};
  for (std::size_t k = 1; k <= bound; ++k) power.push_back(power.back() * n);
  for (std::size_t i = 0; i <= bound; ++i)
    for (std::size_t j = 0; j <= bound; ++j)
      if (power[i] == power[j] * d) return true;
  return false;
}

std::vector<Graph> enumerate_graphs(std::size_t edges, Label max_label) {
  if (edges == 0) return {Graph::create(GraphSpec{{"v0"}, {}})};
  std::map<std::string, Graph> found;
  for (std::size_t n = 1; n <= edges + 1; ++n) {
    // Edge shapes (i <= j, labels), orientation-normalised for loops.
    std::vector<std::array<std::uint64_t, 4>> shapes;
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = i; j < n; ++j)
        for (Label a = 1; a <= max_label; ++a)
          for (Label b = (i == j ? a : 1); b <= max_label; ++b) shapes.push_back({i, a, b, j});

    // Multisets of `edges` shapes: non-decreasing index sequences.
    std::vector<std::size_t> pick(edges, 0);
    while (true) {
      std::vector<bool> used(n, false);
      for (std::size_t k : pick) used[shapes[k][0]] = used[shapes[k][3]] = true;
      if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
        GraphSpec spec;
        for (std::size_t v = 0; v < n; ++v) spec.vertices.push_back("v" + std::to_string(v));
        for (std::size_t k = 0; k < edges; ++k) {
          const auto& s = shapes[pick[k]];
          spec.edges.push_back({"e" + std::to_string(k + 1), "v" + std::to_string(s[0]),
                                static_cast<std::int64_t>(s[1]), static_cast<std::int64_t>(s[2]),
                                "v" + std::to_string(s[3])});
        }
        if (!validate(spec)) {
          Graph g = Graph::create(spec);
          found.try_emplace(canonical_form(g), std::move(g));
        }
      }
      std::size_t k = edges;
      while (k > 0 && pick[k - 1] + 1 == shapes.size()) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t m = k; m < edges; ++m) pick[m] = pick[k - 1];
    }
  }
  std::vector<Graph> out;
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace gbsr
