#include "hmaps/graphs.hpp"
#include "hmaps/kernels.hpp"
#include "hmaps/maps.hpp"

#include <doctest.h>

#include <random>

using namespace hmaps;

namespace {

MapTable random_map(std::mt19937& rng, int k, int n) {
  std::vector<Word> im(std::size_t{1} << k);
  for (auto& w : im) w = rng() & low_mask(n);
  return MapTable(k, n, im);
}

}  // namespace

TEST_CASE("violating pair counts: parallel equals serial") {
  std::mt19937 rng(1);
  for (int k = 1; k <= 9; ++k) {
    const auto f = random_map(rng, k, k + 2);
    std::vector<Word> all(f.size());
    for (Word x = 0; x < all.size(); ++x) all[x] = x;
    std::vector<Word> half;
    for (Word x = 0; x < all.size(); x += 2) half.push_back(x);
    for (int a = 0; a <= k; a += 2)
      for (int b = 0; b <= k + 2; b += 3) {
        CHECK(kernels::count_violating_pairs(f, a, b, all) == kernels::count_violating_pairs_serial(f, a, b, all));
        CHECK(kernels::count_violating_pairs(f, a, b, half) ==
              kernels::count_violating_pairs_serial(f, a, b, half));
      }
  }
}

TEST_CASE("distance profile kernel: parallel equals serial") {
  std::mt19937 rng(2);
  for (int k = 0; k <= 10; ++k) {
    const auto f = random_map(rng, k, 7);
    CHECK(kernels::min_image_distance_by_input_distance(f) ==
          kernels::min_image_distance_by_input_distance_serial(f));
  }
}

TEST_CASE("hyperplane counts: parallel equals serial") {
  std::mt19937 rng(3);
  for (int m = 1; m <= 12; ++m) {
    std::vector<Word> u, v;
    for (int i = 0; i < 5; ++i) u.push_back(1 + rng() % ((Word{1} << m) - 1));
    for (int i = 0; i < 7; ++i) v.push_back(1 + rng() % ((Word{1} << m) - 1));
    const auto p = kernels::hyperplane_counts(m, u, v);
    const auto s = kernels::hyperplane_counts_serial(m, u, v);
    REQUIRE(p.size() == s.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i].z_u == s[i].z_u);
      CHECK(p[i].z_v == s[i].z_v);
    }
  }
}

TEST_CASE("cayley rows and popcount: parallel equals serial") {
  for (int n = 1; n <= 9; ++n)
    for (int d = 0; d <= n; d += 2) {
      const auto spec = HammingGraphSpec::complement(n, d);
      std::vector<std::uint8_t> conn(std::size_t{1} << n);
      for (Word z = 0; z < conn.size(); ++z) conn[z] = spec.edge_difference(z);
      const auto p = kernels::cayley_adjacency_rows(n, conn);
      CHECK(p == kernels::cayley_adjacency_rows_serial(n, conn));
      CHECK(kernels::popcount_sum(p) == kernels::popcount_sum_serial(p));
      CHECK(kernels::popcount_sum(p) == 2 * CayleyGraph(GraphSpec{spec}).num_edges());
    }
}

TEST_CASE("odd walks: parallel equals serial") {
  std::mt19937 rng(4);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 5 + t;
    ExplicitGraph g(n);
    std::bernoulli_distribution coin(t % 2 ? 0.08 : 0.3);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    std::vector<std::uint64_t> rows;
    for (std::size_t u = 0; u < n; ++u) rows.insert(rows.end(), g.row(u), g.row(u) + g.words_per_row());
    std::vector<std::size_t> src(n);
    for (std::size_t i = 0; i < n; ++i) src[i] = i;
    CHECK(kernels::min_odd_walk(rows, n, g.words_per_row(), src) ==
          kernels::min_odd_walk_serial(rows, n, g.words_per_row(), src));
    CHECK(odd_girth(g) == odd_girth_serial(g));
  }
}
