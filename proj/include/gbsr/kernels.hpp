#pragma once

// Data-parallel kernels. Each OpenMP version has a serial twin with the same
// contract; tests assert they agree and the benchmark compares them.

#include <cstddef>
#include <span>
#include <vector>

#include "gbsr/explorer.hpp"
#include "gbsr/moves.hpp"
#include "gbsr/rigidity.hpp"

namespace gbsr {

// Translation length of the image of every sample word.
std::vector<std::size_t> lengths_parallel(const MarkedState& s, std::span<const GeneratorWord> words);
std::vector<std::size_t> lengths_serial(const MarkedState& s, std::span<const GeneratorWord> words);

struct SweepRow {
  bool criterion_rigid = false;
  Empirical empirical = Empirical::Inconclusive;
  bool ascending = false;
  std::size_t classes = 0;
};

// Criterion verdict and explorer verdict (default bounds) for every graph.
std::vector<SweepRow> sweep_parallel(std::span<const Graph> graphs);
std::vector<SweepRow> sweep_serial(std::span<const Graph> graphs);

}  // namespace gbsr
