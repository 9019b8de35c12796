#include "gbsr/words.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace gbsr {

PathWord PathWord::identity(VertexId v) {
  PathWord w;
  w.start = w.finish = v;
  return w;
}

PathWord PathWord::power(VertexId v, Exponent k) {
  PathWord w = identity(v);
  w.powers.front() = std::move(k);
  return w;
}

PathWord PathWord::step(const Graph& g, EdgeLetter letter) {
  const Edge& e = g.edge(letter.edge);
  PathWord w;
  w.start = e.at(letter.departure()).vertex;
  w.finish = e.at(letter.arrival()).vertex;
  w.powers.assign(2, Exponent(0));
  w.letters.push_back(letter);
  return w;
}

PathWord& PathWord::append(const PathWord& tail) {
  powers.back() += tail.powers.front();
  powers.insert(powers.end(), tail.powers.begin() + 1, tail.powers.end());
  letters.insert(letters.end(), tail.letters.begin(), tail.letters.end());
  finish = tail.finish;
  return *this;
}

PathWord PathWord::inverse() const {
  PathWord w;
  w.start = finish;
  w.finish = start;
  w.powers.assign(powers.rbegin(), powers.rend());
  for (auto& p : w.powers) p = -p;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(it->inverse());
  return w;
}

VertexId vertex_at(const Graph& g, const PathWord& w, std::size_t i) {
  if (i == 0) return w.start;
  const EdgeLetter& l = w.letters.at(i - 1);
  return g.edge(l.edge).at(l.arrival()).vertex;
}

PathWord& append_reduced(const Graph& g, PathWord& acc, const PathWord& tail) {
  acc.powers.back() += tail.powers.front();
  for (std::size_t i = 0; i < tail.letters.size(); ++i) {
    const EdgeLetter next = tail.letters[i];
    if (!acc.letters.empty() && acc.letters.back() == next.inverse()) {
      const EdgeLetter prev = acc.letters.back();
      const Edge& e = g.edge(prev.edge);
      const Label in = e.at(prev.arrival()).label;
      const Exponent& middle = acc.powers.back();
      if (middle % in == 0) {
        Exponent moved = (middle / in) * e.at(prev.departure()).label;
        acc.powers.pop_back();
        acc.letters.pop_back();
        acc.powers.back() += moved;
        acc.powers.back() += tail.powers[i + 1];
        continue;
      }
    }
    acc.letters.push_back(next);
    acc.powers.push_back(tail.powers[i + 1]);
  }
  acc.finish = tail.finish;
  return acc;
}

PathWord reduce(const Graph& g, const PathWord& w) {
  PathWord out = PathWord::identity(w.start);
  out.powers.reserve(w.powers.size());
  out.letters.reserve(w.letters.size());
  append_reduced(g, out, w);
  return out;
}

std::size_t translation_length(const Graph& g, const PathWord& w) {
  PathWord r = reduce(g, w);
  const std::size_t n = r.letters.size();
  if (n == 0) return 0;

  // Cyclic word: letters[i] is followed by power[i]; the last power absorbs
  // the two powers sitting at the basepoint.
  std::deque<EdgeLetter> letters(r.letters.begin(), r.letters.end());
  std::deque<Exponent> power(r.powers.begin() + 1, r.powers.end());
  power.back() += r.powers.front();

  while (letters.size() >= 2) {
    const EdgeLetter last = letters.back();
    if (!(letters.front() == last.inverse())) break;
    const Edge& e = g.edge(last.edge);
    const Label in = e.at(last.arrival()).label;
    if (power.back() % in != 0) break;
    Exponent moved = (power.back() / in) * e.at(last.departure()).label;
    // Pinch across the wrap: drop both letters, merge the flanking powers.
    letters.pop_back();
    letters.pop_front();
    power.pop_back();
    Exponent first = std::move(power.front());
    power.pop_front();
    if (letters.empty()) break;
    power.back() += moved;
    power.back() += first;
  }
  return letters.size();
}

bool is_elliptic(const Graph& g, const PathWord& w) { return translation_length(g, w) == 0; }

Rational modulus(const Graph& g, const PathWord& w) {
  Exponent num = 1, den = 1;
  for (const auto& l : w.letters) {
    const Edge& e = g.edge(l.edge);
    num *= e.at(l.departure()).label;
    den *= e.at(l.arrival()).label;
  }
  return Rational(num, den);
}

// ---------------------------------------------------------------------------

GeneratorWord& GeneratorWord::push(Generator g, const Exponent& k) {
  if (k == 0) return *this;
  if (!syllables.empty() && syllables.back().generator == g) {
    syllables.back().exponent += k;
    if (syllables.back().exponent == 0) syllables.pop_back();
  } else {
    syllables.push_back({g, k});
  }
  return *this;
}

GeneratorWord& GeneratorWord::append(const GeneratorWord& tail) {
  for (const auto& s : tail.syllables) push(s.generator, s.exponent);
  return *this;
}

GeneratorWord GeneratorWord::inverse() const {
  GeneratorWord w;
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) w.push(it->generator, -it->exponent);
  return w;
}

Presentation::Presentation(Graph graph) : Presentation(std::make_shared<const Graph>(std::move(graph))) {}

Presentation::Presentation(std::shared_ptr<const Graph> graph) : graph_(std::move(graph)) {
  const Graph& g = *graph_;
  tree_edge_.assign(g.edge_count(), false);
  tree_paths_.assign(g.vertex_count(), PathWord{});
  std::vector<bool> seen(g.vertex_count(), false);

  std::deque<VertexId> queue{0};
  seen[0] = true;
  tree_paths_[0] = PathWord::identity(0);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeEnd end : g.ends_at(v)) {
      VertexId w = g.origin(end.other());
      if (seen[w]) continue;
      seen[w] = true;
      tree_edge_[end.edge] = true;
      // Leaving v through `end`: arrive at the other side.
      EdgeLetter step{end.edge, end.side == Side::A ? -1 : +1};
      tree_paths_[w] = tree_paths_[v];
      tree_paths_[w].append(PathWord::step(g, step));
      queue.push_back(w);
    }
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v) generators_.push_back({GeneratorKind::Vertex, v});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!tree_edge_[e]) generators_.push_back({GeneratorKind::Stable, e});
  }
}

std::size_t Presentation::generator_index(Generator g) const {
  auto it = std::find(generators_.begin(), generators_.end(), g);
  if (it == generators_.end()) throw Error(ErrorCode::UnknownGenerator, "generator not in this presentation");
  return static_cast<std::size_t>(it - generators_.begin());
}

std::string Presentation::symbol(Generator g) const {
  if (g.kind == GeneratorKind::Vertex) return "x_" + graph_->vertex_name(g.index);
  return "t_" + graph_->edge(g.index).name;
}

std::optional<Generator> Presentation::find_generator(std::string_view symbol) const {
  if (symbol.size() < 3 || symbol[1] != '_') return std::nullopt;
  auto name = symbol.substr(2);
  if (symbol[0] == 'x') {
    if (auto v = graph_->find_vertex(name)) return Generator{GeneratorKind::Vertex, *v};
  } else if (symbol[0] == 't') {
    if (auto e = graph_->find_edge(name); e && !tree_edge_[*e]) return Generator{GeneratorKind::Stable, *e};
  }
  return std::nullopt;
}

PathWord Presentation::tree_path(VertexId from, VertexId to) const {
  PathWord w = tree_paths_.at(from).inverse();
  w.append(tree_paths_.at(to));
  return reduce(*graph_, w);
}

PathWord Presentation::generator_path(Generator g) const {
  if (g.kind == GeneratorKind::Vertex) {
    PathWord w = tree_paths_.at(g.index);
    w.powers.back() += 1;
    w.append(tree_paths_.at(g.index).inverse());
    return w;
  }
  const Edge& e = graph_->edge(g.index);
  PathWord w = tree_paths_.at(e.at(Side::B).vertex);
  w.append(PathWord::step(*graph_, {g.index, +1}));
  w.append(tree_paths_.at(e.at(Side::A).vertex).inverse());
  return w;
}

PathWord Presentation::to_path_word(const GeneratorWord& word) const {
  PathWord out = PathWord::identity(basepoint());
  for (const auto& s : word.syllables) {
    if (s.generator.kind == GeneratorKind::Vertex) {
      PathWord w = tree_paths_.at(s.generator.index);
      w.powers.back() += s.exponent;
      w.append(tree_paths_.at(s.generator.index).inverse());
      out.append(w);
      continue;
    }
    if (boost::multiprecision::abs(s.exponent) > 1'000'000)
      throw Error(ErrorCode::SyntaxError, "stable-letter exponent too large");
    const PathWord unit = generator_path(s.generator);
    const PathWord piece = s.exponent > 0 ? unit : unit.inverse();
    for (long k = boost::multiprecision::abs(s.exponent).convert_to<long>(); k > 0; --k) out.append(piece);
  }
  return out;
}

GeneratorWord Presentation::to_generator_word(const PathWord& w) const {
  GeneratorWord out;
  for (std::size_t i = 0; i < w.powers.size(); ++i) {
    if (i > 0) {
      const EdgeLetter l = w.letters[i - 1];
      if (!tree_edge_[l.edge]) out.push({GeneratorKind::Stable, l.edge}, Exponent(l.sign));
    }
    out.push({GeneratorKind::Vertex, vertex_at(*graph_, w, i)}, w.powers[i]);
  }
  return out;
}

std::vector<GeneratorWord> Presentation::relators() const {
  std::vector<GeneratorWord> out;
  for (EdgeId id = 0; id < graph_->edge_count(); ++id) {
    const Edge& e = graph_->edge(id);
    const Generator xv{GeneratorKind::Vertex, e.at(Side::A).vertex};
    const Generator xw{GeneratorKind::Vertex, e.at(Side::B).vertex};
    GeneratorWord r;
    if (tree_edge_[id]) {
      r.push(xv, Exponent(e.at(Side::A).label));
      r.push(xw, -Exponent(e.at(Side::B).label));
    } else {
      const Generator t{GeneratorKind::Stable, id};
      r.push(t, 1).push(xv, Exponent(e.at(Side::A).label)).push(t, -1).push(xw, -Exponent(e.at(Side::B).label));
    }
    out.push_back(std::move(r));
  }
  return out;
}

GeneratorWord parse_word(const Presentation& p, std::string_view text) {
  GeneratorWord out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string sym = tok;
    Exponent k = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      sym = tok.substr(0, caret);
      std::string exp = tok.substr(caret + 1);
      bool ok = !exp.empty();
      for (std::size_t i = 0; i < exp.size() && ok; ++i)
        ok = std::isdigit(static_cast<unsigned char>(exp[i])) || (i == 0 && exp[i] == '-' && exp.size() > 1);
      if (!ok) throw Error(ErrorCode::SyntaxError, "bad exponent in '" + tok + "'");
      k = Exponent(exp);
    }
    auto g = p.find_generator(sym);
    if (!g) throw Error(ErrorCode::UnknownGenerator, "'" + sym + "' is not a generator");
    out.push(*g, k);
  }
  return out;
}

std::string format_word(const Presentation& p, const GeneratorWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w.syllables) {
    if (!first) out << ' ';
    first = false;
    out << p.symbol(s.generator);
    if (s.exponent != 1) out << '^' << s.exponent;
  }
  return out.str();
}

std::string format_path(const Graph& g, const PathWord& w) {
  std::ostringstream out;
  out << g.vertex_name(w.start) << ":";
  for (std::size_t i = 0; i < w.powers.size(); ++i) {
    if (w.powers[i] != 0) out << " x_" << g.vertex_name(vertex_at(g, w, i)) << "^" << w.powers[i];
    if (i < w.letters.size()) {
      const auto& l = w.letters[i];
      out << " " << g.edge(l.edge).name << (l.sign > 0 ? "+" : "-");
    }
  }
  return out.str();
}

}  // namespace gbsr
