// Serial vs OpenMP kernels: fingerprint lengths on one large sample, and the
// criterion/explorer sweep over a small corpus.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "gbsr/explorer.hpp"
#include "gbsr/kernels.hpp"
#include "gbsr/rigidity.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t radius = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 6;
  std::printf("threads: %d\n", omp_get_max_threads());

  gbsr::MarkedState s = gbsr::MarkedState::seed(gbsr::parse_graph("edge e1 v 2 6 v\nedge e2 v 2 3 w\n"));
  s = gbsr::expand(s, "v", 2, {});
  const auto words = gbsr::sample_words(s.seed_presentation(), radius);
  std::vector<std::size_t> a, b;
  const double ls = seconds([&] { a = gbsr::lengths_serial(s, words); });
  const double lp = seconds([&] { b = gbsr::lengths_parallel(s, words); });
  std::printf("lengths  words=%zu serial=%.3fs parallel=%.3fs speedup=%.2f agree=%s\n", words.size(), ls, lp,
              ls / lp, a == b ? "yes" : "no");

  auto corpus = gbsr::enumerate_graphs(1, 6);
  std::vector<gbsr::SweepRow> x, y;
  const double ss = seconds([&] { x = gbsr::sweep_serial(corpus); });
  const double sp = seconds([&] { y = gbsr::sweep_parallel(corpus); });
  bool agree = x.size() == y.size();
  for (std::size_t i = 0; agree && i < x.size(); ++i)
    agree = x[i].empirical == y[i].empirical && x[i].classes == y[i].classes;
  std::printf("sweep    graphs=%zu serial=%.3fs parallel=%.3fs speedup=%.2f agree=%s\n", corpus.size(), ss, sp,
              ss / sp, agree ? "yes" : "no");
  return agree && a == b ? 0 : 1;
}
