#pragma once

// Hamming graphs H(n,d), their complements, and the homomorphic and strong
// products of two of them. All of these are Cayley graphs on F_2^N: adjacency
// of u, v depends only on u ^ v. The generic machinery below (explicit bitset
// graphs, branch-and-bound independence number, homomorphism search, odd
// girth) works on explicit graphs; the *GraphSpec types build them.

#include "hmaps/exact.hpp"
#include "hmaps/map_table.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hmaps {

/// H(n,d): edges at distance 1..d. Complemented: edges at distance > d.
struct HammingGraphSpec {
  int n = 0;
  int d = 0;
  bool complemented = false;

  static HammingGraphSpec hamming(int n, int d);
  static HammingGraphSpec complement(int n, int d);

  void validate() const;
  std::uint64_t num_vertices() const { return std::uint64_t{1} << n; }
  /// Adjacency as a function of the difference z = u ^ v.
  bool edge_difference(Word z) const;
  std::string name() const;

  friend bool operator==(const HammingGraphSpec&, const HammingGraphSpec&) = default;
};

enum class ProductKind { Homomorphic, Strong };

/// left (x) right with kind in {homomorphic, strong}. Vertex (x,y) has index
/// x * 2^{right.n} + y.
struct ProductGraphSpec {
  HammingGraphSpec left;
  HammingGraphSpec right;
  ProductKind kind = ProductKind::Homomorphic;

  void validate() const;
  int total_bits() const { return left.n + right.n; }
  std::uint64_t num_vertices() const { return std::uint64_t{1} << total_bits(); }
  bool edge_difference(Word z) const;
  std::string name() const;
};

using GraphSpec = std::variant<HammingGraphSpec, ProductGraphSpec>;

int total_bits(const GraphSpec& spec);
std::string name(const GraphSpec& spec);

/// Bit-vector with an explicit length. Parsed strings list coordinate 0 first.
struct BitString {
  Word bits = 0;
  int length = 0;

  static BitString parse(std::string_view text);
  std::string str() const;
};

bool adjacent(const HammingGraphSpec& spec, const BitString& u, const BitString& v);
/// Product vertices are (left, right) pairs.
bool adjacent(const ProductGraphSpec& spec, const BitString& ux, const BitString& uy,
              const BitString& vx, const BitString& vy);

/// Connection set of a Cayley graph on F_2^bits: difference z is an edge
/// iff connection[z]. Symmetric and irreflexive by construction.
class CayleyGraph {
 public:
  explicit CayleyGraph(const GraphSpec& spec);
  CayleyGraph(int bits, std::vector<std::uint8_t> connection);

  int bits() const { return bits_; }
  std::uint64_t num_vertices() const { return std::uint64_t{1} << bits_; }
  bool adjacent(Word u, Word v) const { return u != v && connection_[u ^ v]; }
  const std::vector<Word>& generators() const { return generators_; }
  std::uint64_t degree() const { return generators_.size(); }
  std::uint64_t num_edges() const { return num_vertices() * degree() / 2; }

 private:
  int bits_;
  std::vector<std::uint8_t> connection_;
  std::vector<Word> generators_;  // differences z with connection[z]
};

/// Dense symmetric bitset adjacency.
class ExplicitGraph {
 public:
  explicit ExplicitGraph(std::size_t n = 0);
  static ExplicitGraph from_cayley(const CayleyGraph& g);
  static ExplicitGraph from_spec(const GraphSpec& spec);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return wpr_; }
  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * wpr_ + v / 64] >> (v % 64)) & 1;
  }
  void add_edge(std::size_t u, std::size_t v);
  const std::uint64_t* row(std::size_t u) const { return rows_.data() + u * wpr_; }
  std::size_t degree(std::size_t u) const;
  std::uint64_t num_edges() const;

  ExplicitGraph complement() const;
  ExplicitGraph induced(const std::vector<std::size_t>& vertices) const;
  static ExplicitGraph strong_product(const ExplicitGraph& a, const ExplicitGraph& b);

 private:
  std::size_t n_, wpr_;
  std::vector<std::uint64_t> rows_;
};

/// Search budget measured in search nodes.
struct Budget {
  std::uint64_t max_nodes = 50'000'000;
};

struct IndependenceResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // vertex indices, ascending
  bool exact = true;                 // false: budget exhausted, size is a lower bound only
  std::uint64_t nodes = 0;
};

/// Exact maximum independent set by branch-and-bound (max clique in the
/// complement with greedy-colouring bound). pin_vertex forces that vertex into
/// the set, valid when the graph is vertex-transitive.
IndependenceResult independence_number(const ExplicitGraph& g, Budget budget = {},
                                       std::optional<std::size_t> pin_vertex = std::nullopt);
/// Pins vertex 0 (every GraphSpec is a Cayley graph).
IndependenceResult independence_number(const GraphSpec& spec, Budget budget = {});

/// True iff no two listed vertices are adjacent.
bool is_independent(const ExplicitGraph& g, const std::vector<std::size_t>& set);

/// |V|^2 / (2(|E| + |V|)).
Rat turan_lower_bound(const GraphSpec& spec);
Rat turan_lower_bound(const ExplicitGraph& g);

enum class HomStatus { Found, None, Undecided };

struct HomomorphismResult {
  HomStatus status = HomStatus::Undecided;
  std::optional<MapTable> map;  // set when Found
  std::uint64_t nodes = 0;
};

/// Backtracking search for src -> dst with forward checking. The image of the
/// all-zeros vertex is pinned to all-zeros (translations are automorphisms).
HomomorphismResult find_homomorphism(const HammingGraphSpec& src, const HammingGraphSpec& dst,
                                     Budget budget = {});

/// Every edge of src maps to an edge of dst.
bool preserves_edges(const HammingGraphSpec& src, const HammingGraphSpec& dst, const MapTable& f);

/// Shortest odd cycle; nullopt means bipartite. Single BFS from vertex 0.
std::optional<int> odd_girth(const GraphSpec& spec);
/// Shortest odd cycle of an arbitrary graph, BFS from every vertex in parallel.
std::optional<int> odd_girth(const ExplicitGraph& g);
std::optional<int> odd_girth_serial(const ExplicitGraph& g);

/// Number of closed walks of length m at a vertex of complement-H(n,d):
/// 2^{-n} sum_x C(n,x) (2^n [x=0] - sum_{j<=d} K_j(x))^m.
Rat closed_walk_count(int n, int d, int m);

}  // namespace hmaps
