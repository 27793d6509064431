#include "hmaps/graphs.hpp"
#include "hmaps/maps.hpp"
#include "hmaps/projective.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hmaps;

namespace {

MapTable identity(int k) {
  std::vector<Word> im(std::size_t{1} << k);
  for (Word x = 0; x < im.size(); ++x) im[x] = x;
  return MapTable(k, k, im);
}

MapTable constant(int k, int n) { return MapTable(k, n, std::vector<Word>(std::size_t{1} << k, 0)); }

// The graph {(x, f(x))} is independent in Hbar(k,a) ltimes Hbar(n,b).
bool graph_is_independent(const MapTable& f, int a, int b) {
  const ProductGraphSpec p{HammingGraphSpec::complement(f.k, a), HammingGraphSpec::complement(f.n, b),
                           ProductKind::Homomorphic};
  for (Word x = 0; x < f.size(); ++x)
    for (Word y = x + 1; y < f.size(); ++y)
      if (p.edge_difference(((x ^ y) << f.n) | (f(x) ^ f(y)))) return false;
  return true;
}

}  // namespace

TEST_CASE("map table invariants") {
  CHECK_THROWS_AS(MapTable(2, 2, {0, 1, 2}), DomainError);
  CHECK_THROWS_AS(MapTable(1, 1, {0, 2}), DomainError);
  CHECK_NOTHROW(MapTable(1, 1, {0, 1}));
}

TEST_CASE("repetition map") {
  const auto f = repetition_map(2, 2);
  CHECK(f.n == 4);
  // x = 01 (coordinate 0 is 0, coordinate 1 is 1) is index 2; image 0101 is bits 1 and 3
  CHECK(f(0b10) == 0b1010);
  CHECK(verify_map(f, 1, 2));
  const auto id = repetition_map(3, 1);
  CHECK(id.images == identity(3).images);
}

TEST_CASE("majority map") {
  const auto f = majority_map(3);
  CHECK(f.n == 1);
  CHECK(f(0b100) == 0);
  CHECK(f(0b110) == 1);
  CHECK(verify_map(f, 2, 0));
  CHECK_THROWS_AS(majority_map(4), DomainError);

  const auto p = distance_profile(majority_map(6));
  // pairs at distance > 2j+... block granularity: profile(a) >= floor((a+1)/3) - ... check against oracle
  for (int a = 0; a <= 6; ++a) {
    int best = DistanceProfile::kInfinite;
    for (Word x = 0; x < 64; ++x)
      for (Word y = 0; y < 64; ++y)
        if (distance(x, y) > a) {
          const int d = distance(majority_map(6)(x), majority_map(6)(y));
          if (best == DistanceProfile::kInfinite || d < best) best = d;
        }
    CHECK(p.profile[static_cast<std::size_t>(a)] == best);
  }
  // blocks need more than 2 flips each before the majority must change
  CHECK(p.profile[2] == 0);
  CHECK(p.profile[4] == 1);
  CHECK(p.profile[5] == 2);
}

TEST_CASE("separation map") {
  auto f = separation_map(2, 4, 2, {0}, 3, std::vector<Word>{0});
  CHECK(f.images == std::vector<Word>(4, 0));
  CHECK(verify_map(f, 2, 3));
  CHECK_THROWS_AS(separation_map(2, 4, 1, {0}, 3, std::vector<Word>{0}), DomainError);

  f = separation_map(3, 4, 1, {0b0000, 0b1111}, 3, std::vector<Word>{0b000, 0b111});
  CHECK(verify_map(f, 2, 3));
  CHECK_THROWS_AS(separation_map(3, 4, 1, {0b0000, 0b1000}, 3, std::vector<Word>{0b000, 0b111}), DomainError);
  CHECK_THROWS_AS(separation_map(3, 4, 1, {0b0000}, 3, std::vector<Word>{0b000, 0b111}), DomainError);

  // greedy cover: every point within radius
  for (int k = 1; k <= 6; ++k)
    for (int r = 0; r <= 2; ++r) {
      const auto c = greedy_cover(k, r);
      for (Word x = 0; x < (Word{1} << k); ++x) {
        bool hit = false;
        for (Word z : c) hit = hit || distance(x, z) <= r;
        CHECK(hit);
      }
    }
  CHECK(greedy_cover(3, 1).size() == 2);
}

TEST_CASE("linear maps") {
  CHECK(linear_map({0b001, 0b010, 0b100}, 3).images == identity(3).images);
  const auto fano = generator_matrix(fano_config());
  CHECK(verify_linear(fano, 4, 2, 3));
  CHECK(verify_map(linear_map(fano, 4), 2, 3));
  const std::vector<Word> zero(3, 0);
  CHECK_FALSE(verify_map(linear_map(zero, 4), 2, 0));
  CHECK_FALSE(verify_linear(zero, 4, 2, 0));
  CHECK(verify_map(linear_map(zero, 4), 3, 0));
}

TEST_CASE("linear verification by weights equals verification by pairs") {
  std::mt19937 rng(2024);
  for (int k : {3, 4})
    for (int t = 0; t < 150; ++t) {
      std::vector<Word> rows;
      for (int i = 0; i < k; ++i) rows.push_back(rng() & 0xF);
      const auto f = linear_map(rows, 4);
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= 4; ++b) CHECK(verify_linear(rows, 4, a, b) == verify_map(f, a, b));
    }
}

TEST_CASE("verify map examples") {
  CHECK(verify_map(repetition_map(2, 2), 1, 2));
  CHECK_FALSE(verify_map(identity(4), 1, 2));
  CHECK(verify_map(constant(3, 2), 3, 5));
}

TEST_CASE("violating pairs") {
  CHECK(count_violating_pairs(identity(4), 1, 2) == 48);
  // closed form 2^{k-1} sum_{a<w<=b} C(k,w)
  for (int k = 1; k <= 6; ++k)
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) {
        long want = 0;
        for (int w = a + 1; w <= b; ++w) want += binomial(k, w).get_si();
        want <<= (k - 1);
        CHECK(count_violating_pairs(identity(k), a, b) == static_cast<std::uint64_t>(want));
      }
  CHECK(count_violating_pairs(constant(3, 2), 1, 0) == 16);
  CHECK(count_violating_pairs(repetition_map(2, 2), 1, 2) == 0);
  // subset
  CHECK(count_violating_pairs(identity(4), 1, 2, std::vector<Word>{0, 3, 5}) == 3);
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    std::vector<Word> im(32);
    for (auto& w : im) w = rng() & 0x3F;
    const MapTable f(5, 6, im);
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 6; b += 2) CHECK(count_violating_pairs(f, a, b) == oracle::violations(f, a, b));
  }
}

TEST_CASE("distance profile") {
  auto p = distance_profile(repetition_map(2, 2));
  CHECK(p.profile == std::vector<int>{2, 4, DistanceProfile::kInfinite});
  p = distance_profile(identity(3));
  CHECK(p.profile == std::vector<int>{1, 2, 3, DistanceProfile::kInfinite});
  p = distance_profile(constant(3, 2));
  CHECK(p.profile == std::vector<int>{0, 0, 0, DistanceProfile::kInfinite});
  CHECK(p.is_infinite(3));
  CHECK(p.exceeds(3, 100));
}

TEST_CASE("profile, verification, counting and independence agree") {
  std::vector<MapTable> maps = {repetition_map(2, 2), repetition_map(3, 2), majority_map(3), majority_map(6),
                                identity(4),          constant(3, 2),       linear_map(generator_matrix(fano_config()), 4)};
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    std::vector<Word> im(16);
    for (auto& w : im) w = rng() & 0x1F;
    maps.emplace_back(4, 5, im);
  }
  for (const auto& f : maps) {
    const auto p = distance_profile(f);
    for (int a = 0; a <= f.k; ++a)
      for (int b = 0; b <= f.n; ++b) {
        const bool ok = verify_map(f, a, b);
        CHECK(ok == p.exceeds(a, b));
        CHECK(ok == (count_violating_pairs(f, a, b) == 0));
        if (ok) CHECK(graph_is_independent(f, a, b));
      }
  }
}
