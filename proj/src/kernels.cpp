#include "hmaps/kernels.hpp"

#include <algorithm>
#include <bit>

namespace hmaps::kernels {

namespace {

inline bool violates(const MapTable& f, Word x, Word y, int a, int b) {
  return distance(x, y) > a && distance(f(x), f(y)) <= b;
}

inline bool inner_product_zero(Word w, Word p) { return (std::popcount(w & p) & 1) == 0; }

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

// BFS from s level by level; returns 2L+1 for the first level L containing an
// edge, or kNoPair.
int odd_walk_from(std::span<const std::uint64_t> rows, std::size_t n, std::size_t wpr, std::size_t s,
                  int cutoff) {
  std::vector<int> level(n, -1);
  std::vector<std::size_t> frontier{s}, next;
  level[s] = 0;
  for (int L = 0; !frontier.empty(); ++L) {
    if (2 * L + 1 >= cutoff) return kNoPair;
    for (std::size_t a : frontier) {
      const std::uint64_t* r = rows.data() + a * wpr;
      for (std::size_t wi = 0; wi < wpr; ++wi) {
        for (std::uint64_t bits = r[wi]; bits; bits &= bits - 1) {
          std::size_t b = wi * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          if (level[b] == L) return 2 * L + 1;
        }
      }
    }
    next.clear();
    for (std::size_t a : frontier) {
      const std::uint64_t* r = rows.data() + a * wpr;
      for (std::size_t wi = 0; wi < wpr; ++wi) {
        for (std::uint64_t bits = r[wi]; bits; bits &= bits - 1) {
          std::size_t b = wi * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          if (level[b] < 0) {
            level[b] = L + 1;
            next.push_back(b);
          }
        }
      }
    }
    frontier.swap(next);
  }
  return kNoPair;
}

}  // namespace

std::uint64_t count_violating_pairs(const MapTable& f, int a, int b, std::span<const Word> domain) {
  const auto m = static_cast<std::int64_t>(domain.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (std::int64_t i = 0; i < m; ++i) {
    const Word x = domain[static_cast<std::size_t>(i)];
    std::uint64_t local = 0;
    for (std::int64_t j = i + 1; j < m; ++j)
      local += violates(f, x, domain[static_cast<std::size_t>(j)], a, b);
    total += local;
  }
  return total;
}

std::uint64_t count_violating_pairs_serial(const MapTable& f, int a, int b,
                                           std::span<const Word> domain) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (std::size_t j = i + 1; j < domain.size(); ++j) total += violates(f, domain[i], domain[j], a, b);
  return total;
}

std::vector<int> min_image_distance_by_input_distance(const MapTable& f) {
  const auto N = static_cast<std::int64_t>(f.size());
  const std::size_t width = static_cast<std::size_t>(f.k) + 1;
  std::vector<int> best(width, kNoPair);
#pragma omp parallel
  {
    std::vector<int> local(width, kNoPair);
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t x = 0; x < N; ++x) {
      for (std::int64_t y = x + 1; y < N; ++y) {
        const auto w = static_cast<std::size_t>(distance(static_cast<Word>(x), static_cast<Word>(y)));
        local[w] = std::min(local[w], distance(f(static_cast<Word>(x)), f(static_cast<Word>(y))));
      }
    }
#pragma omp critical
    for (std::size_t w = 0; w < width; ++w) best[w] = std::min(best[w], local[w]);
  }
  return best;
}

std::vector<int> min_image_distance_by_input_distance_serial(const MapTable& f) {
  std::vector<int> best(static_cast<std::size_t>(f.k) + 1, kNoPair);
  for (Word x = 0; x < f.size(); ++x)
    for (Word y = x + 1; y < f.size(); ++y) {
      auto w = static_cast<std::size_t>(distance(x, y));
      best[w] = std::min(best[w], distance(f(x), f(y)));
    }
  return best;
}

std::vector<HyperplaneCount> hyperplane_counts(int m, std::span<const Word> u, std::span<const Word> v) {
  const std::int64_t total = (std::int64_t{1} << m) - 1;
  std::vector<HyperplaneCount> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    const Word w = static_cast<Word>(i + 1);
    HyperplaneCount c;
    for (Word p : u) c.z_u += inner_product_zero(w, p);
    for (Word p : v) c.z_v += inner_product_zero(w, p);
    out[static_cast<std::size_t>(i)] = c;
  }
  return out;
}

std::vector<HyperplaneCount> hyperplane_counts_serial(int m, std::span<const Word> u,
                                                      std::span<const Word> v) {
  std::vector<HyperplaneCount> out;
  for (Word w = 1; w < (Word{1} << m); ++w) {
    HyperplaneCount c;
    for (Word p : u) c.z_u += inner_product_zero(w, p);
    for (Word p : v) c.z_v += inner_product_zero(w, p);
    out.push_back(c);
  }
  return out;
}

std::vector<std::uint64_t> cayley_adjacency_rows(int bits, std::span<const std::uint8_t> connection) {
  const std::size_t n = std::size_t{1} << bits;
  const std::size_t wpr = words_for(n);
  std::vector<Word> gens;
  for (Word z = 1; z < n; ++z)
    if (connection[z]) gens.push_back(z);
  std::vector<std::uint64_t> rows(n * wpr, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t iu = 0; iu < static_cast<std::int64_t>(n); ++iu) {
    const auto u = static_cast<Word>(iu);
    std::uint64_t* r = rows.data() + static_cast<std::size_t>(u) * wpr;
    for (Word z : gens) {
      const Word v = u ^ z;
      r[v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  return rows;
}

std::vector<std::uint64_t> cayley_adjacency_rows_serial(int bits,
                                                        std::span<const std::uint8_t> connection) {
  const std::size_t n = std::size_t{1} << bits;
  const std::size_t wpr = words_for(n);
  std::vector<std::uint64_t> rows(n * wpr, 0);
  for (Word u = 0; u < n; ++u)
    for (Word v = 0; v < n; ++v)
      if (u != v && connection[u ^ v]) rows[u * wpr + v / 64] |= std::uint64_t{1} << (v % 64);
  return rows;
}

std::uint64_t popcount_sum(std::span<const std::uint64_t> rows) {
  std::uint64_t total = 0;
  const auto m = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (std::int64_t i = 0; i < m; ++i) total += static_cast<std::uint64_t>(std::popcount(rows[i]));
  return total;
}

std::uint64_t popcount_sum_serial(std::span<const std::uint64_t> rows) {
  std::uint64_t total = 0;
  for (auto w : rows) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

int min_odd_walk(std::span<const std::uint64_t> rows, std::size_t n, std::size_t wpr,
                 std::span<const std::size_t> sources) {
  int best = kNoPair;
  const auto m = static_cast<std::int64_t>(sources.size());
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
  for (std::int64_t i = 0; i < m; ++i)
    best = std::min(best, odd_walk_from(rows, n, wpr, sources[static_cast<std::size_t>(i)], kNoPair));
  return best;
}

int min_odd_walk_serial(std::span<const std::uint64_t> rows, std::size_t n, std::size_t wpr,
                        std::span<const std::size_t> sources) {
  int best = kNoPair;
  for (std::size_t s : sources) best = std::min(best, odd_walk_from(rows, n, wpr, s, best));
  return best;
}

}  // namespace hmaps::kernels
