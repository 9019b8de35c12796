#include "gbsr/moves.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace gbsr {

namespace {

constexpr Label kLabelLimit = Label{1} << 62;

Label checked_mul(Label a, Label b) {
  if (a != 0 && b > kLabelLimit / a) throw Error(ErrorCode::LabelOverflow, "label product exceeds 2^62");
  return a * b;
}

constexpr int sign_arriving_at(Side s) noexcept { return s == Side::A ? +1 : -1; }

std::string fresh_name(const std::vector<std::string>& taken, const std::string& stem) {
  auto used = [&](const std::string& n) { return std::find(taken.begin(), taken.end(), n) != taken.end(); };
  if (!used(stem)) return stem;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!used(candidate)) return candidate;
  }
}

std::vector<std::string> edge_names(const Graph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges()) out.push_back(e.name);
  return out;
}

}  // namespace

std::string to_string(const NamedEnd& e) { return e.edge + "." + side_char(e.side); }

std::string to_string(const Move& m) {
  std::ostringstream out;
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, Collapse>) {
          out << "collapse " << mv.edge;
        } else if constexpr (std::is_same_v<T, Expansion>) {
          out << "expand " << mv.vertex << " " << mv.p;
          for (const auto& e : mv.moved) out << " " << to_string(e);
        } else if constexpr (std::is_same_v<T, Slide>) {
          out << "slide " << to_string(mv.moving) << " across " << to_string(mv.across);
        } else {
          out << "induct " << mv.d;
        }
      },
      m);
  return out.str();
}

namespace {

NamedEnd parse_named_end(const std::string& tok) {
  if (tok.size() < 3 || tok[tok.size() - 2] != '.' || (tok.back() != 'A' && tok.back() != 'B'))
    throw Error(ErrorCode::SyntaxError, "expected <edge>.<A|B>, got '" + tok + "'");
  return {tok.substr(0, tok.size() - 2), tok.back() == 'A' ? Side::A : Side::B};
}

Label parse_positive(const std::string& tok) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::SyntaxError, "expected a positive integer, got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    throw Error(ErrorCode::SyntaxError, "integer out of range: '" + tok + "'");
  }
}

}  // namespace

Move parse_move(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  if (tok.empty()) throw Error(ErrorCode::SyntaxError, "empty move");
  if (tok[0] == "collapse" && tok.size() == 2) return Collapse{tok[1]};
  if (tok[0] == "induct" && tok.size() == 2) return Induction{parse_positive(tok[1])};
  if (tok[0] == "slide" && tok.size() == 4 && tok[2] == "across")
    return Slide{parse_named_end(tok[1]), parse_named_end(tok[3])};
  if (tok[0] == "expand" && tok.size() >= 3) {
    Expansion e{tok[1], parse_positive(tok[2]), {}};
    for (std::size_t i = 3; i < tok.size(); ++i) e.moved.push_back(parse_named_end(tok[i]));
    return e;
  }
  throw Error(ErrorCode::SyntaxError, "cannot parse move '" + std::string(text) + "'");
}

NamedEnd named(const Graph& g, EdgeEnd end) { return {g.edge(end.edge).name, end.side}; }

EdgeEnd resolve(const Graph& g, const NamedEnd& end) { return {g.edge_or_throw(end.edge), end.side}; }

// ---------------------------------------------------------------------------

// How a move rewrites words: x_v^k becomes prefix . x^(multiplier k) .
// prefix^-1, and each letter becomes a path between the images of its
// endpoints.
struct PowerImage {
  PathWord prefix;
  Label multiplier = 1;
};

struct LetterMap {
  std::vector<VertexId> vertex_image;
  std::vector<PowerImage> powers;                    // per old vertex
  std::vector<std::array<PathWord, 2>> letters;      // per old edge: [sign -1, sign +1]
};

class StateBuilder {
 public:
  static MarkedState seed(Graph g) {
    MarkedState s;
    auto pres = std::make_shared<const Presentation>(std::move(g));
    auto seed = std::make_shared<MarkedState::Seed>();
    seed->presentation = pres;
    seed->betti = pres->graph().betti_number();
    for (Generator gen : pres->generators()) {
      PathWord w = reduce(pres->graph(), pres->generator_path(gen));
      seed->moduli.push_back(modulus(pres->graph(), w));
      s.marking_.push_back(std::move(w));
    }
    s.seed_ = std::move(seed);
    s.current_ = std::move(pres);
    return s;
  }

  static MarkedState transport(const MarkedState& old, Graph next, const LetterMap& map, Move move) {
    MarkedState s;
    s.seed_ = old.seed_;
    s.current_ = std::make_shared<const Presentation>(std::move(next));
    s.history_ = old.history_;
    s.history_.push_back(std::move(move));

    const Graph& og = old.graph();
    const Graph& ng = s.graph();
    const PathWord conj = s.current_->tree_path(s.current_->basepoint(), map.vertex_image[old.presentation().basepoint()]);
    const PathWord conj_inv = conj.inverse();

    s.marking_.reserve(old.marking_.size());
    for (const PathWord& w : old.marking_) {
      PathWord out = conj;
      auto push_power = [&](VertexId v, const Exponent& k) {
        if (k == 0) return;
        const PowerImage& img = map.powers[v];
        if (img.prefix.letters.empty()) {
          out.powers.back() += k * img.multiplier;
          return;
        }
        append_reduced(ng, out, img.prefix);
        out.powers.back() += k * img.multiplier;
        append_reduced(ng, out, img.prefix.inverse());
      };
      push_power(w.start, w.powers.front());
      for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const EdgeLetter l = w.letters[i];
        append_reduced(ng, out, map.letters[l.edge][l.sign > 0 ? 1 : 0]);
        push_power(vertex_at(og, w, i + 1), w.powers[i + 1]);
      }
      append_reduced(ng, out, conj_inv);
      s.marking_.push_back(std::move(out));
    }
    return s;
  }
};

namespace {

// Identity-shaped map onto `next`, matching vertices and edges by name.
LetterMap identity_map(const Graph& old, const Graph& next) {
  LetterMap m;
  for (VertexId v = 0; v < old.vertex_count(); ++v) {
    auto img = next.find_vertex(old.vertex_name(v));
    m.vertex_image.push_back(img.value_or(0));
    m.powers.push_back({PathWord::identity(img.value_or(0)), 1});
  }
  for (EdgeId e = 0; e < old.edge_count(); ++e) {
    auto img = next.find_edge(old.edge(e).name);
    if (img) {
      m.letters.push_back({PathWord::step(next, {*img, -1}), PathWord::step(next, {*img, +1})});
    } else {
      m.letters.push_back({PathWord{}, PathWord{}});
    }
  }
  return m;
}

PathWord path_of(const Graph& g, std::initializer_list<EdgeLetter> steps) {
  auto it = steps.begin();
  PathWord w = PathWord::step(g, *it);
  for (++it; it != steps.end(); ++it) w.append(PathWord::step(g, *it));
  return w;
}

}  // namespace

MarkedState MarkedState::seed(Graph g) { return StateBuilder::seed(std::move(g)); }

std::vector<GeneratorWord> MarkedState::marking_words() const {
  std::vector<GeneratorWord> out;
  for (const auto& w : marking_) out.push_back(current_->to_generator_word(w));
  return out;
}

PathWord MarkedState::image(const GeneratorWord& seed_word) const {
  const Graph& g = graph();
  const Presentation& sp = seed_presentation();
  PathWord acc = PathWord::identity(current_->basepoint());
  for (const auto& s : seed_word.syllables) {
    const std::size_t idx = sp.generator_index(s.generator);
    const PathWord piece = s.exponent > 0 ? marking_[idx] : marking_[idx].inverse();
    for (Exponent k = boost::multiprecision::abs(s.exponent); k > 0; --k) append_reduced(g, acc, piece);
  }
  return acc;
}

MarkedState collapse(const MarkedState& s, std::string_view edge_name) {
  const Graph& g = s.graph();
  const EdgeId id = g.edge_or_throw(edge_name);
  const Edge& e = g.edge(id);
  if (e.is_loop()) throw Error(ErrorCode::NotCollapsible, "edge '" + e.name + "' is a loop");
  Side unit;
  if (e.at(Side::B).label == 1) {
    unit = Side::B;
  } else if (e.at(Side::A).label == 1) {
    unit = Side::A;
  } else {
    throw Error(ErrorCode::NotCollapsible, "edge '" + e.name + "' has no end labelled 1");
  }
  const VertexId u = e.at(unit).vertex;
  const VertexId v = e.at(opposite(unit)).vertex;
  const Label p = e.at(opposite(unit)).label;

  GraphSpec spec;
  for (VertexId x = 0; x < g.vertex_count(); ++x)
    if (x != u) spec.vertices.push_back(g.vertex_name(x));
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == id) continue;
    const Edge& ef = g.edge(f);
    auto end_of = [&](Side side) {
      const EndRecord& r = ef.at(side);
      return r.vertex == u ? std::pair{g.vertex_name(v), checked_mul(r.label, p)}
                           : std::pair{g.vertex_name(r.vertex), r.label};
    };
    auto [va, la] = end_of(Side::A);
    auto [vb, lb] = end_of(Side::B);
    spec.edges.push_back({ef.name, va, static_cast<std::int64_t>(la), static_cast<std::int64_t>(lb), vb});
  }
  Graph next = Graph::create(spec);

  LetterMap map = identity_map(g, next);
  const VertexId image_v = *next.find_vertex(g.vertex_name(v));
  map.vertex_image[u] = image_v;
  map.powers[u] = {PathWord::identity(image_v), p};
  map.letters[id] = {PathWord::identity(image_v), PathWord::identity(image_v)};
  return StateBuilder::transport(s, std::move(next), map, Collapse{e.name});
}

MarkedState expand(const MarkedState& s, std::string_view vertex, Label p, std::span<const NamedEnd> moved) {
  const Graph& g = s.graph();
  const VertexId v = g.vertex_or_throw(vertex);
  if (p == 0) throw Error(ErrorCode::NotDivisible, "expansion index must be positive");

  std::set<EdgeEnd> moving;
  for (const auto& n : moved) {
    EdgeEnd end = resolve(g, n);
    if (g.origin(end) != v)
      throw Error(ErrorCode::WrongOrigin, to_string(n) + " does not start at '" + std::string(vertex) + "'");
    if (g.label(end) % p != 0)
      throw Error(ErrorCode::NotDivisible, "label of " + to_string(n) + " is not divisible by " + std::to_string(p));
    moving.insert(end);
  }

  const std::string u_name = fresh_name(g.vertex_names(), "u");
  const std::string d_name = fresh_name(edge_names(g), "d");

  GraphSpec spec = g.spec();
  spec.vertices.push_back(u_name);
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    auto& es = spec.edges[f];
    if (moving.count({f, Side::A})) {
      es.from = u_name;
      es.label_from /= static_cast<std::int64_t>(p);
    }
    if (moving.count({f, Side::B})) {
      es.to = u_name;
      es.label_to /= static_cast<std::int64_t>(p);
    }
  }
  spec.edges.push_back({d_name, g.vertex_name(v), static_cast<std::int64_t>(p), 1, u_name});
  Graph next = Graph::create(spec);

  LetterMap map = identity_map(g, next);
  const EdgeId d = *next.find_edge(d_name);
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    const EdgeId nf = *next.find_edge(g.edge(f).name);
    for (int sign : {-1, +1}) {
      const EdgeLetter l{f, sign};
      const bool out = moving.count({f, l.departure()}) > 0;
      const bool in = moving.count({f, l.arrival()}) > 0;
      PathWord seg = out ? path_of(next, {{d, -1}, {nf, sign}}) : PathWord::step(next, {nf, sign});
      if (in) seg.append(PathWord::step(next, {d, +1}));
      map.letters[f][sign > 0 ? 1 : 0] = std::move(seg);
    }
  }
  std::vector<NamedEnd> sorted(moved.begin(), moved.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return StateBuilder::transport(s, std::move(next), map, Expansion{g.vertex_name(v), p, std::move(sorted)});
}

MarkedState slide(const MarkedState& s, const NamedEnd& moving, const NamedEnd& across) {
  const Graph& g = s.graph();
  const EdgeEnd e = resolve(g, moving);
  const EdgeEnd f = resolve(g, across);
  if (g.origin(e) != g.origin(f))
    throw Error(ErrorCode::DifferentOrigin, to_string(moving) + " and " + to_string(across) + " start at different vertices");
  if (e.edge == f.edge) throw Error(ErrorCode::SameEdge, "cannot slide an edge across itself");
  if (g.label(e) % g.label(f) != 0)
    throw Error(ErrorCode::NotDivisible, "label of " + to_string(across) + " does not divide label of " + to_string(moving));

  const EdgeEnd far = f.other();
  const Label new_label = checked_mul(g.label(e) / g.label(f), g.label(far));

  GraphSpec spec = g.spec();
  auto& es = spec.edges[e.edge];
  if (e.side == Side::A) {
    es.from = g.vertex_name(g.origin(far));
    es.label_from = static_cast<std::int64_t>(new_label);
  } else {
    es.to = g.vertex_name(g.origin(far));
    es.label_to = static_cast<std::int64_t>(new_label);
  }
  Graph next = Graph::create(spec);

  LetterMap map = identity_map(g, next);
  const EdgeId ne = *next.find_edge(g.edge(e.edge).name);
  const EdgeId nf = *next.find_edge(g.edge(f.edge).name);
  for (int sign : {-1, +1}) {
    const EdgeLetter l{e.edge, sign};
    PathWord seg = l.departure() == e.side ? path_of(next, {{nf, sign_arriving_at(far.side)}, {ne, sign}})
                                           : PathWord::step(next, {ne, sign});
    if (l.arrival() == e.side) seg.append(PathWord::step(next, {nf, sign_arriving_at(f.side)}));
    map.letters[e.edge][sign > 0 ? 1 : 0] = std::move(seg);
  }
  return StateBuilder::transport(s, std::move(next), map, Slide{moving, across});
}

MarkedState induct(const MarkedState& s, Label d) {
  const Graph& g = s.graph();
  if (g.vertex_count() != 1 || g.edge_count() != 1)
    throw Error(ErrorCode::NotAscending, "induction needs a single vertex with a single loop");
  const Edge& loop = g.edge(0);
  Side unit;
  if (loop.at(Side::A).label == 1) {
    unit = Side::A;
  } else if (loop.at(Side::B).label == 1) {
    unit = Side::B;
  } else {
    throw Error(ErrorCode::NotAscending, "the loop has no end labelled 1");
  }
  const Side wide = opposite(unit);
  const Label n = loop.at(wide).label;
  if (d == 0 || n % d != 0)
    throw Error(ErrorCode::NotDivisor, std::to_string(d) + " does not divide " + std::to_string(n));

  Graph next = Graph::create(g.spec());
  LetterMap map = identity_map(g, next);
  // x = s^-1 x^n s where s conjugates x to x^n; the new vertex generator is x^d.
  map.powers[0] = {PathWord::step(next, {0, sign_arriving_at(wide)}), n / d};
  return StateBuilder::transport(s, std::move(next), map, Induction{d});
}

MarkedState apply(const MarkedState& s, const Move& m) {
  return std::visit(
      [&](const auto& mv) -> MarkedState {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, Collapse>) {
          return collapse(s, mv.edge);
        } else if constexpr (std::is_same_v<T, Expansion>) {
          return expand(s, mv.vertex, mv.p, mv.moved);
        } else if constexpr (std::is_same_v<T, Slide>) {
          return slide(s, mv.moving, mv.across);
        } else {
          return induct(s, mv.d);
        }
      },
      m);
}

MarkedState apply_all(MarkedState s, std::span<const Move> moves) {
  for (const auto& m : moves) s = gbsr::apply(s, m);
  return s;
}

std::vector<Rational> modulus_fingerprint(const MarkedState& s) {
  std::vector<Rational> out;
  for (const auto& w : s.marking()) out.push_back(modulus(s.graph(), w));
  return out;
}

InvariantReport check_invariants(const MarkedState& s) {
  InvariantReport r;
  const Presentation& sp = s.seed_presentation();
  for (const auto& rel : sp.relators()) {
    if (!s.image(rel).is_trivial()) r.relations_trivial = false;
  }
  auto gens = sp.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].kind == GeneratorKind::Vertex && !is_elliptic(s.graph(), s.marking()[i]))
      r.vertex_generators_elliptic = false;
  }
  auto moduli = modulus_fingerprint(s);
  r.modulus_preserved = std::equal(moduli.begin(), moduli.end(), s.seed_moduli().begin(), s.seed_moduli().end());
  r.betti_preserved = s.graph().betti_number() == s.seed_betti_number();
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Move> enumerate_moves(const MarkedState& s, const MoveBounds& bounds) {
  const Graph& g = s.graph();
  std::vector<Move> out;

  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    Side unit;
    if (e.at(Side::B).label == 1) {
      unit = Side::B;
    } else if (e.at(Side::A).label == 1) {
      unit = Side::A;
    } else {
      continue;
    }
    const VertexId u = e.at(unit).vertex;
    const Label p = e.at(opposite(unit)).label;
    bool fits = true;
    for (EdgeEnd end : g.ends_at(u)) {
      if (g.edge(end.edge).name != e.name && g.label(end) > bounds.max_label / p) fits = false;
    }
    if (fits) out.push_back(Collapse{e.name});
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (EdgeEnd moving : g.ends_at(v)) {
      for (EdgeEnd across : g.ends_at(v)) {
        if (moving.edge == across.edge || g.label(moving) % g.label(across) != 0) continue;
        const Label factor = g.label(moving) / g.label(across);
        if (g.label(across.other()) > bounds.max_label / factor) continue;
        out.push_back(Slide{named(g, moving), named(g, across)});
      }
    }
  }

  if (g.edge_count() + 1 <= bounds.max_edges) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::set<Label> divisors;
      for (EdgeEnd end : g.ends_at(v)) {
        const Label l = g.label(end);
        for (Label p = 2; p <= l && p <= bounds.max_expansion_divisor; ++p)
          if (l % p == 0) divisors.insert(p);
      }
      for (Label p : divisors) {
        std::vector<NamedEnd> divisible;
        for (EdgeEnd end : g.ends_at(v))
          if (g.label(end) % p == 0) divisible.push_back(named(g, end));
        if (divisible.size() > bounds.max_moved_ends) divisible.resize(bounds.max_moved_ends);
        for (std::size_t mask = 0; mask < (std::size_t{1} << divisible.size()); ++mask) {
          Expansion m{g.vertex_name(v), p, {}};
          for (std::size_t i = 0; i < divisible.size(); ++i)
            if (mask & (std::size_t{1} << i)) m.moved.push_back(divisible[i]);
          out.push_back(std::move(m));
        }
      }
    }
  }

  if (g.vertex_count() == 1 && g.edge_count() == 1) {
    const Edge& loop = g.edge(0);
    if (loop.at(Side::A).label == 1 || loop.at(Side::B).label == 1) {
      const Label n = loop.at(Side::A).label == 1 ? loop.at(Side::B).label : loop.at(Side::A).label;
      for (Label d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(Induction{d});
    }
  }
  return out;
}

}  // namespace gbsr
