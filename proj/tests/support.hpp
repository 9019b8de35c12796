#pragma once

// Shared fixtures for the unit tests and the acceptance binary.

#include <random>
#include <string>

#include "gbsr/explorer.hpp"
#include "gbsr/graph.hpp"
#include "gbsr/moves.hpp"
#include "gbsr/words.hpp"

namespace gbsr::testing {

inline Graph loop(Label a, Label b) {
  return parse_graph("edge e1 v " + std::to_string(a) + " " + std::to_string(b) + " v\n");
}

inline bool is_prime(Label n) {
  if (n < 2) return false;
  for (Label q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// Connected graph: a random spanning tree on 1..edges+1 vertices, the rest
// of the edges placed anywhere.
inline Graph random_graph(std::mt19937& rng, std::size_t edges, Label max_label) {
  std::uniform_int_distribution<std::size_t> nv(1, edges + 1);
  std::uniform_int_distribution<Label> label(1, max_label);
  const std::size_t n = nv(rng);
  GraphSpec spec;
  for (std::size_t v = 0; v < n; ++v) spec.vertices.push_back("v" + std::to_string(v));
  for (std::size_t k = 0; k < edges; ++k) {
    std::size_t a, b;
    if (k + 1 < n) {
      a = std::uniform_int_distribution<std::size_t>(0, k)(rng);
      b = k + 1;
    } else {
      a = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      b = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    }
    spec.edges.push_back({"e" + std::to_string(k + 1), spec.vertices[a], static_cast<std::int64_t>(label(rng)),
                          static_cast<std::int64_t>(label(rng)), spec.vertices[b]});
  }
  return Graph::create(spec);
}

// Product of `length` random generators with exponents in -2..2.
inline GeneratorWord random_word(std::mt19937& rng, const Presentation& p, std::size_t length) {
  const auto gens = p.generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> exp(-2, 2);
  GeneratorWord w;
  for (std::size_t i = 0; i < length; ++i) w.push(gens[pick(rng)], Exponent(exp(rng)));
  return w;
}

inline std::size_t length_of(const Presentation& p, const GeneratorWord& w) {
  return translation_length(p.graph(), p.to_path_word(w));
}

inline GeneratorWord power(const GeneratorWord& g, int k) {
  GeneratorWord out;
  for (int i = 0; i < k; ++i) out.append(g);
  return out;
}

}  // namespace gbsr::testing
