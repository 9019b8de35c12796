#include "gbsr/kernels.hpp"

#include <exception>

namespace gbsr {

namespace {

SweepRow sweep_one(const Graph& g) {
  SweepRow row;
  row.criterion_rigid = check(g).rigid;
  ExploreReport r = explore(g);
  row.empirical = r.rigid;
  row.ascending = r.ascending;
  row.classes = r.classes.size();
  return row;
}

// OpenMP regions must not throw; the first failure is rethrown afterwards.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<std::size_t> lengths_serial(const MarkedState& s, std::span<const GeneratorWord> words) {
  std::vector<std::size_t> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(translation_length(s.graph(), s.image(w)));
  return out;
}

std::vector<std::size_t> lengths_parallel(const MarkedState& s, std::span<const GeneratorWord> words) {
  std::vector<std::size_t> out(words.size());
  parallel_for(words.size(), [&](std::size_t i) { out[i] = translation_length(s.graph(), s.image(words[i])); });
  return out;
}

std::vector<SweepRow> sweep_serial(std::span<const Graph> graphs) {
  std::vector<SweepRow> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(sweep_one(g));
  return out;
}

std::vector<SweepRow> sweep_parallel(std::span<const Graph> graphs) {
  std::vector<SweepRow> out(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) { out[i] = sweep_one(graphs[i]); });
  return out;
}

}  // namespace gbsr
