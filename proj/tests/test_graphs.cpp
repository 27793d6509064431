#include "hmaps/graphs.hpp"
#include "hmaps/kernels.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hmaps;

namespace {

oracle::Adj adj_of(const GraphSpec& spec) {
  const std::size_t n = std::size_t{1} << total_bits(spec);
  return oracle::adjacency(n, [&](std::size_t u, std::size_t v) {
    return std::visit([&](const auto& s) { return s.edge_difference(u ^ v); }, spec);
  });
}

oracle::Adj adj_of(const ExplicitGraph& g) {
  return oracle::adjacency(g.size(), [&](std::size_t u, std::size_t v) { return g.adjacent(u, v); });
}

BitString bs(const char* s) { return BitString::parse(s); }

}  // namespace

TEST_CASE("adjacency examples") {
  const auto h43 = HammingGraphSpec::hamming(4, 3);
  CHECK_FALSE(adjacent(h43, bs("0000"), bs("1111")));
  CHECK(adjacent(h43, bs("0000"), bs("0111")));
  CHECK_FALSE(adjacent(h43, bs("0110"), bs("0110")));

  const auto k4 = HammingGraphSpec::complement(2, 0);
  for (const char* u : {"00", "01", "10", "11"})
    for (const char* v : {"00", "01", "10", "11"})
      CHECK(adjacent(k4, bs(u), bs(v)) == (std::string(u) != v));

  const ProductGraphSpec p{HammingGraphSpec::complement(3, 2), HammingGraphSpec::complement(4, 3),
                           ProductKind::Homomorphic};
  CHECK(adjacent(p, bs("000"), bs("0000"), bs("000"), bs("0001")));
  CHECK_FALSE(adjacent(p, bs("000"), bs("0000"), bs("000"), bs("0000")));
  // left adjacent (distance 3), right not adjacent (distance 1)
  CHECK(adjacent(p, bs("000"), bs("0000"), bs("111"), bs("1000")));
  // left adjacent, right adjacent
  CHECK_FALSE(adjacent(p, bs("000"), bs("0000"), bs("111"), bs("1111")));
  // left distinct but not adjacent
  CHECK_FALSE(adjacent(p, bs("000"), bs("0000"), bs("100"), bs("0000")));

  CHECK_THROWS_AS(adjacent(h43, bs("000"), bs("0000")), DomainError);
  CHECK_THROWS_AS(HammingGraphSpec::hamming(3, 4).validate(), DomainError);
}

TEST_CASE("adjacency is symmetric and irreflexive, products follow the edge rules") {
  for (int kind = 0; kind < 2; ++kind) {
    const ProductGraphSpec p{HammingGraphSpec::complement(2, 1), HammingGraphSpec::hamming(2, 1),
                             kind ? ProductKind::Strong : ProductKind::Homomorphic};
    const auto& L = p.left;
    const auto& R = p.right;
    for (Word u = 0; u < 16; ++u)
      for (Word v = 0; v < 16; ++v) {
        const Word ux = u >> 2, uy = u & 3, vx = v >> 2, vy = v & 3;
        const bool lx = L.edge_difference(ux ^ vx), ry = R.edge_difference(uy ^ vy);
        bool want;
        if (p.kind == ProductKind::Homomorphic)
          want = (ux == vx && uy != vy) || (lx && !ry);
        else
          want = u != v && (ux == vx || lx) && (uy == vy || ry);
        CHECK(p.edge_difference(u ^ v) == want);
        CHECK(p.edge_difference(u ^ v) == p.edge_difference(v ^ u));
      }
    CHECK_FALSE(p.edge_difference(0));
  }
}

TEST_CASE("independence number examples") {
  auto r = independence_number(HammingGraphSpec::hamming(4, 3));
  CHECK(r.exact);
  CHECK(r.size == 2);
  CHECK(r.witness == std::vector<std::size_t>{0, 15});

  r = independence_number(HammingGraphSpec::complement(4, 2));
  CHECK(r.exact);
  CHECK(r.size == 5);

  const ProductGraphSpec p{HammingGraphSpec::complement(3, 2), HammingGraphSpec::complement(4, 3),
                           ProductKind::Homomorphic};
  r = independence_number(p);
  CHECK(r.exact);
  CHECK(r.size == 8);
  CHECK(is_independent(ExplicitGraph::from_spec(p), r.witness));
}

TEST_CASE("independence number agrees with the recursive oracle") {
  std::vector<GraphSpec> specs;
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= n; ++d) {
      specs.push_back(HammingGraphSpec::hamming(n, d));
      specs.push_back(HammingGraphSpec::complement(n, d));
    }
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (auto kind : {ProductKind::Homomorphic, ProductKind::Strong})
        specs.push_back(ProductGraphSpec{HammingGraphSpec::complement(2, a),
                                         kind == ProductKind::Strong ? HammingGraphSpec::hamming(2, b)
                                                                     : HammingGraphSpec::complement(2, b),
                                         kind});
  for (const auto& s : specs) {
    CAPTURE(name(s));
    const auto r = independence_number(s);
    REQUIRE(r.exact);
    CHECK(r.size == oracle::independence_number(adj_of(s)));
    CHECK(r.witness.size() == r.size);
    CHECK(is_independent(ExplicitGraph::from_spec(s), r.witness));
    // unpinned search on the explicit graph agrees
    CHECK(independence_number(ExplicitGraph::from_spec(s)).size == r.size);
  }
}

TEST_CASE("budget exhaustion is reported as a lower bound") {
  const auto r = independence_number(HammingGraphSpec::complement(8, 4), Budget{10});
  CHECK_FALSE(r.exact);
  CHECK(r.size >= 1);
  CHECK(is_independent(ExplicitGraph::from_spec(HammingGraphSpec::complement(8, 4)), r.witness));
}

TEST_CASE("turan lower bound examples") {
  CHECK(turan_lower_bound(HammingGraphSpec::complement(2, 0)) == make_rat(4, 5));
  CHECK(turan_lower_bound(HammingGraphSpec::hamming(5, 0)) == make_rat(32, 2));
  CHECK(turan_lower_bound(HammingGraphSpec::hamming(4, 1)) == make_rat(8, 3));
  // closed form matches the explicit edge count
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (auto kind : {ProductKind::Homomorphic, ProductKind::Strong}) {
        const ProductGraphSpec p{HammingGraphSpec::complement(3, a),
                                 kind == ProductKind::Strong ? HammingGraphSpec::hamming(3, b)
                                                             : HammingGraphSpec::complement(3, b),
                                 kind};
        CHECK(turan_lower_bound(p) == turan_lower_bound(ExplicitGraph::from_spec(p)));
      }
}

TEST_CASE("homomorphism search examples") {
  const auto src = HammingGraphSpec::complement(3, 2), dst = HammingGraphSpec::complement(4, 3);
  auto r = find_homomorphism(src, dst);
  REQUIRE(r.status == HomStatus::Found);
  CHECK(preserves_edges(src, dst, *r.map));
  CHECK((*r.map)(0) == 0);

  r = find_homomorphism(HammingGraphSpec::complement(2, 0), HammingGraphSpec::complement(4, 2));
  CHECK(r.status == HomStatus::None);

  const auto g = HammingGraphSpec::complement(3, 1);
  r = find_homomorphism(g, g);
  REQUIRE(r.status == HomStatus::Found);
  CHECK(preserves_edges(g, g, *r.map));

  r = find_homomorphism(HammingGraphSpec::complement(4, 1), HammingGraphSpec::complement(5, 3), Budget{3});
  CHECK(r.status == HomStatus::Undecided);
}

TEST_CASE("found homomorphisms respect odd girth and independence ratios") {
  int found = 0;
  for (int sn = 2; sn <= 3; ++sn)
    for (int sd = 0; sd < sn; ++sd)
      for (int tn = sn; tn <= 4; ++tn)
        for (int td = 0; td < tn; ++td) {
          const auto s = HammingGraphSpec::complement(sn, sd), t = HammingGraphSpec::complement(tn, td);
          CAPTURE(s.name());
          CAPTURE(t.name());
          const auto r = find_homomorphism(s, t);
          REQUIRE(r.status != HomStatus::Undecided);
          if (r.status != HomStatus::Found) continue;
          ++found;
          CHECK(preserves_edges(s, t, *r.map));
          const auto gs = odd_girth(GraphSpec{s}), gt = odd_girth(GraphSpec{t});
          if (gs) {
            REQUIRE(gt.has_value());
            CHECK(*gs >= *gt);
          }
          const auto as = independence_number(s).size, at = independence_number(t).size;
          CHECK(Rat(static_cast<long>(as), static_cast<long>(s.num_vertices())) >=
                Rat(static_cast<long>(at), static_cast<long>(t.num_vertices())));
        }
  CHECK(found > 5);
}

TEST_CASE("odd girth examples and oracle agreement") {
  CHECK(odd_girth(GraphSpec{HammingGraphSpec::complement(2, 0)}) == 3);
  CHECK(odd_girth(GraphSpec{HammingGraphSpec::complement(4, 2)}) == 5);
  CHECK_FALSE(odd_girth(GraphSpec{HammingGraphSpec::hamming(2, 1)}).has_value());
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= n; ++d)
      for (bool comp : {false, true}) {
        const GraphSpec s = comp ? HammingGraphSpec::complement(n, d) : HammingGraphSpec::hamming(n, d);
        CAPTURE(name(s));
        const int ref = oracle::odd_girth(adj_of(s), 2 * (1 << n) + 1);
        const auto got = odd_girth(s);
        CHECK(got.value_or(-1) == ref);
        const auto eg = ExplicitGraph::from_spec(s);
        CHECK(odd_girth(eg) == got);
        CHECK(odd_girth_serial(eg) == got);
      }
}

TEST_CASE("odd girth of the distance n-2 complements") {
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(odd_girth(GraphSpec{HammingGraphSpec::complement(n, n - 2)}) == 2 * ((n + 2) / 2) - 1);
  }
}

TEST_CASE("odd girth of the distance n-3 complements (expectation, not enforced)") {
  for (int n = 4; n <= 12; ++n) {
    const auto g = odd_girth(GraphSpec{HammingGraphSpec::complement(n, n - 3)});
    const int expected = 2 * ((n + 4) / 4) + 1;
    if (g != expected) MESSAGE("n=" << n << ": odd girth " << g.value_or(-1) << ", formula " << expected);
    CHECK(g.has_value());
  }
}

TEST_CASE("closed walk counts match adjacency matrix powers") {
  CHECK(closed_walk_count(2, 0, 3) == 6);
  CHECK(closed_walk_count(4, 2, 3) == 0);
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= n; ++d) {
      const auto a = adj_of(GraphSpec{HammingGraphSpec::complement(n, d)});
      for (int m = 1; m <= 7; ++m) {
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(m);
        CHECK(closed_walk_count(n, d, m) == Rat(oracle::walk_count(a, m)));
      }
    }
  CHECK_THROWS_AS(closed_walk_count(3, 1, 0), DomainError);
}

TEST_CASE("strong product independence is bounded through a weight slice") {
  const auto g = ExplicitGraph::from_spec(HammingGraphSpec::hamming(3, 1));
  const auto h = ExplicitGraph::from_spec(HammingGraphSpec::hamming(2, 1));
  const auto gh = ExplicitGraph::strong_product(g, h);
  const std::size_t full = oracle::independence_number(adj_of(gh));
  CHECK(independence_number(gh).size == full);
  for (int w = 0; w <= 3; ++w) {
    std::vector<std::size_t> slice;
    for (std::size_t v = 0; v < 8; ++v)
      if (weight(v) == w) slice.push_back(v);
    const auto sub = ExplicitGraph::strong_product(g.induced(slice), h);
    const std::size_t part = oracle::independence_number(adj_of(sub));
    CAPTURE(w);
    CHECK(Rat(static_cast<long>(full)) <= Rat(8 * static_cast<long>(part), static_cast<long>(slice.size())));
  }
}

TEST_CASE("independence of a homomorphic product is at most the left vertex count") {
  for (int k = 1; k <= 3; ++k)
    for (int a = 0; a <= k; ++a)
      for (int n = 1; n <= 3; ++n)
        for (int b = 0; b <= n; ++b) {
          const ProductGraphSpec p{HammingGraphSpec::complement(k, a), HammingGraphSpec::complement(n, b),
                                   ProductKind::Homomorphic};
          CAPTURE(p.name());
          CHECK(independence_number(p).size <= (std::size_t{1} << k));
        }
}

TEST_CASE("explicit graph helpers") {
  const auto g = ExplicitGraph::from_spec(HammingGraphSpec::hamming(3, 1));
  CHECK(g.num_edges() == 12);
  CHECK(g.degree(5) == 3);
  const auto c = g.complement();
  CHECK(c.num_edges() == 28 - 12);
  const auto ind = g.induced({0, 1, 3});
  CHECK(ind.num_edges() == 2);
  CHECK(ExplicitGraph::strong_product(g, g).size() == 64);
  CHECK(CayleyGraph(GraphSpec{HammingGraphSpec::hamming(3, 1)}).num_edges() == 12);
}
