#include "hmaps/graphs.hpp"
#include "hmaps/maps.hpp"
#include "hmaps/projective.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

using namespace hmaps;

namespace {

ProjectiveConfig random_config(std::mt19937& rng, int m, int k, int n, bool u_basis) {
  ProjectiveConfig c{m, {}, {}};
  const Word top = (Word{1} << m) - 1;
  do {
    c.u.clear();
    for (int i = 0; i < k; ++i) c.u.push_back(1 + rng() % top);
  } while (u_basis && f2_rank(c.u) != m);
  for (int j = 0; j < n; ++j) c.v.push_back(1 + rng() % top);
  return c;
}

}  // namespace

TEST_CASE("hyperplane stats examples") {
  // u = {10, 01}, v = {11} with coordinate 0 first
  const ProjectiveConfig c{2, {0b01, 0b10}, {0b11}};
  const auto s = hyperplane_stats(c);
  REQUIRE(s.size() == 3);
  CHECK(s[2].w == 0b11);
  CHECK(s[2].z_u == 0);
  CHECK(s[0].w == 0b01);
  CHECK(s[0].z_u == 1);
  for (const auto& h : s) CHECK((h.z_v == 1) == (h.w == 0b11));

  const ProjectiveConfig e1{3, {1, 1}, {1, 1, 1}};
  for (const auto& h : hyperplane_stats(e1)) {
    if ((h.w & 1) == 0) {
      CHECK(h.z_u == 2);
      CHECK(h.z_v == 3);
    } else {
      CHECK(h.z_u == 0);
    }
  }

  const auto f = hyperplane_stats(fano_config());
  CHECK(f[6].w == 7);
  CHECK(f[6].z_u == 0);
  CHECK(f[6].z_v == 0);

  CHECK_THROWS_AS(hyperplane_stats(ProjectiveConfig{2, {0}, {1}}), DomainError);
  CHECK_THROWS_AS(hyperplane_stats(ProjectiveConfig{2, {4}, {1}}), DomainError);
  CHECK_THROWS_AS(hyperplane_stats(ProjectiveConfig{0, {}, {}}), DomainError);
}

TEST_CASE("fano configuration") {
  const auto c = fano_config();
  CHECK(c.m == 3);
  CHECK(c.u == std::vector<Word>{1, 2, 4});
  CHECK(c.v == std::vector<Word>{1, 2, 4, 7});
  // v_4 on none of the lines through two u's
  for (Word w : {Word{4}, Word{2}, Word{1}}) CHECK(std::popcount(w & 7) % 2 == 1);

  auto r = check_ab_condition(c, 2, 3, AbVariant::Map);
  CHECK(r.ok);
  CHECK(r.spanning);
  CHECK_FALSE(r.witness);

  r = check_ab_condition(c, 1, 3, AbVariant::Map);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK(r.witness->w == 3);
  CHECK(r.witness->z_u == 1);
  CHECK(r.witness->z_v == 2);

  const auto g = generator_matrix(c);
  CHECK(g == std::vector<Word>{0b1001, 0b1010, 0b1100});
  CHECK(verify_map(linear_map(g, 4), 2, 3));
  CHECK_FALSE(find_bad_hyperplane(c, 2, 3));
}

TEST_CASE("spanning preconditions") {
  const ProjectiveConfig flat{3, {1, 2}, {3, 1}};  // all in w = 4
  for (auto v : {AbVariant::Boxtimes, AbVariant::Ltimes, AbVariant::Map}) {
    const auto r = check_ab_condition(flat, 1, 1, v);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.spanning);
  }
  CHECK_THROWS_AS(find_bad_hyperplane(flat, 1, 1), DomainError);
  // map variant needs k = m
  const ProjectiveConfig wide{2, {1, 2, 3}, {1}};
  CHECK_FALSE(check_ab_condition(wide, 3, 1, AbVariant::Map).ok);
  CHECK_THROWS_AS(generator_matrix(wide), DomainError);
}

TEST_CASE("bad hyperplane matches a failing checker witness") {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + t % 3;
    const auto c = random_config(rng, m, m, 2 + t % 4, true);
    for (int a = 0; a <= c.k(); ++a)
      for (int b = 0; b <= c.n(); ++b) {
        const auto bad = find_bad_hyperplane(c, a, b);
        // brute force the defining predicate
        std::optional<Word> want;
        for (const auto& h : hyperplane_stats(c))
          if (h.z_v >= c.n() - b && (h.z_u < c.k() - a || h.z_u == c.k())) {
            want = h.w;
            break;
          }
        CHECK(bad.has_value() == want.has_value());
        if (bad && want) CHECK(bad->w == *want);
        const auto chk = check_ab_condition(c, a, b, AbVariant::Boxtimes);
        if (!chk.ok && chk.witness && bad) CHECK(chk.witness->w == bad->w);
      }
  }
}

TEST_CASE("map condition is equivalent to the linear map verifying") {
  std::mt19937 rng(17);
  for (int t = 0; t < 300; ++t) {
    const int m = 2 + t % 3;
    const auto c = random_config(rng, m, m, 1 + t % 5, true);
    const auto f = linear_map(generator_matrix(c), c.n());
    for (int a = 0; a <= c.k(); ++a)
      for (int b = 0; b <= c.n(); ++b) CHECK(check_ab_condition(c, a, b, AbVariant::Map).ok == verify_map(f, a, b));
  }
}

TEST_CASE("ltimes configurations give independent subspaces") {
  std::mt19937 rng(23);
  int hits = 0;
  for (int t = 0; t < 300; ++t) {
    const int m = 2 + t % 3;
    const int k = m + t % 2, n = 2 + t % 3;
    const auto c = random_config(rng, m, k, n, false);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= n; ++b) {
        if (!check_ab_condition(c, a, b, AbVariant::Ltimes).ok) continue;
        ++hits;
        const ProductGraphSpec p{HammingGraphSpec::complement(k, a), HammingGraphSpec::complement(n, b),
                                 ProductKind::Homomorphic};
        std::vector<Word> pts;
        for (Word w = 0; w < (Word{1} << m); ++w) {
          Word x = 0, y = 0;
          for (int i = 0; i < k; ++i) x |= Word(std::popcount(w & c.u[static_cast<std::size_t>(i)]) & 1) << i;
          for (int j = 0; j < n; ++j) y |= Word(std::popcount(w & c.v[static_cast<std::size_t>(j)]) & 1) << j;
          pts.push_back((x << n) | y);
        }
        std::sort(pts.begin(), pts.end());
        CHECK(std::unique(pts.begin(), pts.end()) == pts.end());
        bool independent = true;
        for (std::size_t i = 0; i < pts.size(); ++i)
          for (std::size_t j = i + 1; j < pts.size(); ++j) independent = independent && !p.edge_difference(pts[i] ^ pts[j]);
        CHECK(independent);
      }
  }
  CHECK(hits > 0);
}

TEST_CASE("each point lies on 2^{m-1}-1 hyperplanes") {
  std::mt19937 rng(29);
  for (int t = 0; t < 100; ++t) {
    const int m = 1 + t % 6;
    const auto c = random_config(rng, m, 1 + t % 5, 1 + t % 4, false);
    long total = 0;
    for (const auto& h : hyperplane_stats(c)) total += h.z_u + h.z_v;
    CHECK(total == ((1L << (m - 1)) - 1) * (c.k() + c.n()));
  }
}

TEST_CASE("rank over F2") {
  CHECK(f2_rank({1, 2, 3}) == 2);
  CHECK(f2_rank({1, 2, 4, 7}) == 3);
  CHECK(f2_rank({}) == 0);
  CHECK(f2_rank({0, 0}) == 0);
}
