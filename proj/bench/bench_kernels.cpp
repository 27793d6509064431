// OpenMP kernels against their serial twins.

#include "hmaps/graphs.hpp"
#include "hmaps/kernels.hpp"
#include "hmaps/maps.hpp"

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

using namespace hmaps;

namespace {

MapTable random_map(int k, int n) {
  std::mt19937_64 rng(7);
  std::vector<Word> img(std::size_t{1} << k);
  for (auto& w : img) w = rng() & low_mask(n);
  return MapTable(k, n, std::move(img));
}

std::vector<Word> all_words(int k) {
  std::vector<Word> d(std::size_t{1} << k);
  std::iota(d.begin(), d.end(), Word{0});
  return d;
}

template <bool Parallel>
void BM_violating_pairs(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  const auto f = random_map(k, 2 * k);
  const auto dom = all_words(k);
  for (auto _ : st) {
    auto c = Parallel ? kernels::count_violating_pairs(f, k / 3, k / 2, dom)
                      : kernels::count_violating_pairs_serial(f, k / 3, k / 2, dom);
    benchmark::DoNotOptimize(c);
  }
}

template <bool Parallel>
void BM_profile(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  const auto f = random_map(k, 2 * k);
  for (auto _ : st) {
    auto p = Parallel ? kernels::min_image_distance_by_input_distance(f)
                      : kernels::min_image_distance_by_input_distance_serial(f);
    benchmark::DoNotOptimize(p);
  }
}

template <bool Parallel>
void BM_hyperplanes(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  std::mt19937_64 rng(11);
  std::vector<Word> u(64), v(128);
  for (auto& p : u) p = (rng() & low_mask(m)) | 1;
  for (auto& p : v) p = (rng() & low_mask(m)) | 1;
  for (auto _ : st) {
    auto h = Parallel ? kernels::hyperplane_counts(m, u, v) : kernels::hyperplane_counts_serial(m, u, v);
    benchmark::DoNotOptimize(h);
  }
}

template <bool Parallel>
void BM_cayley_rows(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::vector<std::uint8_t> conn(std::size_t{1} << n);
  for (Word z = 1; z < conn.size(); ++z) conn[z] = weight(z) > n / 2;
  for (auto _ : st) {
    auto r = Parallel ? kernels::cayley_adjacency_rows(n, conn) : kernels::cayley_adjacency_rows_serial(n, conn);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_odd_girth(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto g = ExplicitGraph::from_spec(HammingGraphSpec::complement(n, n - 3));
  for (auto _ : st) {
    auto l = Parallel ? odd_girth(g) : odd_girth_serial(g);
    benchmark::DoNotOptimize(l);
  }
}

}  // namespace

BENCHMARK(BM_violating_pairs<false>)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_violating_pairs<true>)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_profile<false>)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_profile<true>)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hyperplanes<false>)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hyperplanes<true>)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cayley_rows<false>)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cayley_rows<true>)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_odd_girth<false>)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_odd_girth<true>)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
