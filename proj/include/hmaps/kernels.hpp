#pragma once

// Data-parallel inner loops. Each OpenMP kernel has a plain serial twin with
// the same contract; tests compare the two and bench/ times them.
// Reductions are order-independent (sums, minima, counts), so results are
// identical for any thread count.

#include "hmaps/map_table.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace hmaps::kernels {

inline constexpr int kNoPair = std::numeric_limits<int>::max();

/// Unordered pairs {x, x'} of `domain` with |x - x'| > a and |f(x) - f(x')| <= b.
std::uint64_t count_violating_pairs(const MapTable& f, int a, int b, std::span<const Word> domain);
std::uint64_t count_violating_pairs_serial(const MapTable& f, int a, int b,
                                           std::span<const Word> domain);

/// Entry w (0..k): min |f(x) - f(x')| over pairs with |x - x'| = w, or kNoPair.
std::vector<int> min_image_distance_by_input_distance(const MapTable& f);
std::vector<int> min_image_distance_by_input_distance_serial(const MapTable& f);

/// Entry w-1 for dual vector w = 1..2^m-1: (#u with <w,u> = 0, #v with <w,v> = 0).
struct HyperplaneCount {
  int z_u = 0;
  int z_v = 0;
};
std::vector<HyperplaneCount> hyperplane_counts(int m, std::span<const Word> u,
                                               std::span<const Word> v);
std::vector<HyperplaneCount> hyperplane_counts_serial(int m, std::span<const Word> u,
                                                      std::span<const Word> v);

/// Dense bitset rows (words_per_row words each) of the Cayley graph with the
/// given connection set over 2^bits vertices.
std::vector<std::uint64_t> cayley_adjacency_rows(int bits, std::span<const std::uint8_t> connection);
std::vector<std::uint64_t> cayley_adjacency_rows_serial(int bits,
                                                        std::span<const std::uint8_t> connection);

/// Sum of popcounts over a bitset adjacency (twice the edge count).
std::uint64_t popcount_sum(std::span<const std::uint64_t> rows);
std::uint64_t popcount_sum_serial(std::span<const std::uint64_t> rows);

/// Shortest odd closed walk through each listed source, minimised; kNoPair if none.
/// rows/wpr describe a dense adjacency of n vertices.
int min_odd_walk(std::span<const std::uint64_t> rows, std::size_t n, std::size_t wpr,
                 std::span<const std::size_t> sources);
int min_odd_walk_serial(std::span<const std::uint64_t> rows, std::size_t n, std::size_t wpr,
                        std::span<const std::size_t> sources);

}  // namespace hmaps::kernels
