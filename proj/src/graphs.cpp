#include "hmaps/graphs.hpp"

#include "hmaps/kernels.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace hmaps {

namespace {

constexpr int kMaxBits = 26;

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

inline bool test_bit(const std::uint64_t* r, std::size_t v) { return (r[v / 64] >> (v % 64)) & 1; }
inline void set_bit(std::uint64_t* r, std::size_t v) { r[v / 64] |= std::uint64_t{1} << (v % 64); }
inline void clear_bit(std::uint64_t* r, std::size_t v) { r[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

Int hamming_degree(const HammingGraphSpec& s) {
  Int deg = 0;
  for (int w = 1; w <= s.n; ++w)
    if (s.complemented ? w > s.d : w <= s.d) deg += binomial(s.n, w);
  return deg;
}

Int spec_degree(const GraphSpec& spec) {
  if (auto* h = std::get_if<HammingGraphSpec>(&spec)) return hamming_degree(*h);
  const auto& p = std::get<ProductGraphSpec>(spec);
  Int dx = hamming_degree(p.left), dy = hamming_degree(p.right);
  Int ny = pow2(static_cast<unsigned>(p.right.n));
  if (p.kind == ProductKind::Homomorphic) return (ny - 1) + dx * (ny - dy);
  return (dx + 1) * (dy + 1) - 1;
}

void check_bits(int bits) {
  if (bits < 0 || bits > kMaxBits)
    throw DomainError("graph on 2^" + std::to_string(bits) + " vertices is beyond explicit range");
}

}  // namespace

// ---- specs -----------------------------------------------------------------

HammingGraphSpec HammingGraphSpec::hamming(int n, int d) {
  HammingGraphSpec s{n, d, false};
  s.validate();
  return s;
}

HammingGraphSpec HammingGraphSpec::complement(int n, int d) {
  HammingGraphSpec s{n, d, true};
  s.validate();
  return s;
}

void HammingGraphSpec::validate() const {
  if (n < 0 || n > 62) throw DomainError("Hamming graph length n must lie in [0,62]");
  if (d < 0 || d > n) throw DomainError("Hamming graph radius d must lie in [0,n]");
}

bool HammingGraphSpec::edge_difference(Word z) const {
  const int w = weight(z);
  if (w == 0) return false;
  return complemented ? w > d : w <= d;
}

std::string HammingGraphSpec::name() const {
  return std::string(complemented ? "Hbar(" : "H(") + std::to_string(n) + "," + std::to_string(d) + ")";
}

void ProductGraphSpec::validate() const {
  left.validate();
  right.validate();
  if (total_bits() > 62) throw DomainError("product graph too large");
}

bool ProductGraphSpec::edge_difference(Word z) const {
  const Word zx = z >> right.n;
  const Word zy = z & low_mask(right.n);
  if (kind == ProductKind::Homomorphic)
    return (zx == 0 && zy != 0) || (left.edge_difference(zx) && !right.edge_difference(zy));
  if (z == 0) return false;
  return (zx == 0 || left.edge_difference(zx)) && (zy == 0 || right.edge_difference(zy));
}

std::string ProductGraphSpec::name() const {
  return left.name() + (kind == ProductKind::Homomorphic ? " ltimes " : " boxtimes ") + right.name();
}

int total_bits(const GraphSpec& spec) {
  return std::visit([](const auto& s) {
    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, HammingGraphSpec>) return s.n;
    else return s.total_bits();
  }, spec);
}

std::string name(const GraphSpec& spec) {
  return std::visit([](const auto& s) { return s.name(); }, spec);
}

BitString BitString::parse(std::string_view text) {
  if (text.size() > 63) throw DomainError("bit string longer than 63");
  BitString b;
  b.length = static_cast<int>(text.size());
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '1') b.bits |= Word{1} << j;
    else if (text[j] != '0') throw DomainError("bit string may contain only 0 and 1");
  }
  return b;
}

std::string BitString::str() const {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int j = 0; j < length; ++j)
    if ((bits >> j) & 1) s[static_cast<std::size_t>(j)] = '1';
  return s;
}

bool adjacent(const HammingGraphSpec& spec, const BitString& u, const BitString& v) {
  spec.validate();
  if (u.length != spec.n || v.length != spec.n) throw DomainError("vertex length does not match graph");
  return spec.edge_difference(u.bits ^ v.bits);
}

bool adjacent(const ProductGraphSpec& spec, const BitString& ux, const BitString& uy,
              const BitString& vx, const BitString& vy) {
  spec.validate();
  if (ux.length != spec.left.n || vx.length != spec.left.n || uy.length != spec.right.n ||
      vy.length != spec.right.n)
    throw DomainError("vertex length does not match graph");
  return spec.edge_difference(((ux.bits ^ vx.bits) << spec.right.n) | (uy.bits ^ vy.bits));
}

// ---- Cayley / explicit graphs ---------------------------------------------

CayleyGraph::CayleyGraph(const GraphSpec& spec) : bits_(total_bits(spec)) {
  std::visit([](const auto& s) { s.validate(); }, spec);
  check_bits(bits_);
  connection_.assign(std::size_t{1} << bits_, 0);
  std::visit([&](const auto& s) {
    for (Word z = 1; z < connection_.size(); ++z) connection_[z] = s.edge_difference(z);
  }, spec);
  for (Word z = 1; z < connection_.size(); ++z)
    if (connection_[z]) generators_.push_back(z);
}

CayleyGraph::CayleyGraph(int bits, std::vector<std::uint8_t> connection)
    : bits_(bits), connection_(std::move(connection)) {
  check_bits(bits);
  if (connection_.size() != (std::size_t{1} << bits)) throw DomainError("connection set has wrong size");
  connection_[0] = 0;
  for (Word z = 1; z < connection_.size(); ++z)
    if (connection_[z]) generators_.push_back(z);
}

ExplicitGraph::ExplicitGraph(std::size_t n) : n_(n), wpr_(words_for(n)), rows_(n * wpr_, 0) {}

ExplicitGraph ExplicitGraph::from_cayley(const CayleyGraph& g) {
  ExplicitGraph e(g.num_vertices());
  std::vector<std::uint8_t> conn(g.num_vertices(), 0);
  for (Word z : g.generators()) conn[z] = 1;
  e.rows_ = kernels::cayley_adjacency_rows(g.bits(), conn);
  return e;
}

ExplicitGraph ExplicitGraph::from_spec(const GraphSpec& spec) { return from_cayley(CayleyGraph(spec)); }

void ExplicitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_ || u == v) throw DomainError("invalid edge");
  set_bit(rows_.data() + u * wpr_, v);
  set_bit(rows_.data() + v * wpr_, u);
}

std::size_t ExplicitGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < wpr_; ++i) d += static_cast<std::size_t>(std::popcount(row(u)[i]));
  return d;
}

std::uint64_t ExplicitGraph::num_edges() const { return kernels::popcount_sum(rows_) / 2; }

ExplicitGraph ExplicitGraph::complement() const {
  ExplicitGraph c(n_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v)
      if (u != v && !adjacent(u, v)) set_bit(c.rows_.data() + u * wpr_, v);
  return c;
}

ExplicitGraph ExplicitGraph::induced(const std::vector<std::size_t>& vertices) const {
  ExplicitGraph s(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) set_bit(s.rows_.data() + i * s.wpr_, j);
  return s;
}

ExplicitGraph ExplicitGraph::strong_product(const ExplicitGraph& a, const ExplicitGraph& b) {
  const std::size_t nb = b.size();
  ExplicitGraph p(a.size() * nb);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < nb; ++y)
      for (std::size_t x2 = 0; x2 < a.size(); ++x2)
        for (std::size_t y2 = 0; y2 < nb; ++y2) {
          if (x == x2 && y == y2) continue;
          if ((x == x2 || a.adjacent(x, x2)) && (y == y2 || b.adjacent(y, y2)))
            set_bit(p.rows_.data() + (x * nb + y) * p.wpr_, x2 * nb + y2);
        }
  return p;
}

// ---- independence number --------------------------------------------------

namespace {

// Bitset max-clique search with greedy colouring bound.
class CliqueSearch {
 public:
  CliqueSearch(std::size_t n, std::vector<std::uint64_t> adj, std::uint64_t max_nodes)
      : n_(n), wpr_(words_for(n)), adj_(std::move(adj)), max_nodes_(max_nodes) {}

  void run() {
    std::vector<std::uint64_t> p(wpr_, 0);
    for (std::size_t v = 0; v < n_; ++v) set_bit(p.data(), v);
    expand(p);
  }

  std::vector<std::size_t> best;
  std::uint64_t nodes = 0;
  bool aborted = false;

 private:
  void expand(std::vector<std::uint64_t>& p) {
    if (++nodes > max_nodes_) {
      aborted = true;
      return;
    }
    std::vector<std::size_t> order, colour;
    std::vector<std::uint64_t> u = p, q(wpr_);
    for (std::size_t k = 1;; ++k) {
      bool any = false;
      q = u;
      for (std::size_t wi = 0; wi < wpr_; ++wi) {
        while (q[wi]) {
          const std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(q[wi]));
          any = true;
          clear_bit(q.data(), v);
          clear_bit(u.data(), v);
          const std::uint64_t* a = adj_.data() + v * wpr_;
          for (std::size_t t = wi; t < wpr_; ++t) q[t] &= ~a[t];
          order.push_back(v);
          colour.push_back(k);
        }
      }
      if (!any) break;
    }
    std::vector<std::uint64_t> np(wpr_);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (cur_.size() + colour[i] <= best.size()) return;
      const std::size_t v = order[i];
      cur_.push_back(v);
      const std::uint64_t* a = adj_.data() + v * wpr_;
      bool empty = true;
      for (std::size_t t = 0; t < wpr_; ++t) {
        np[t] = p[t] & a[t];
        empty = empty && np[t] == 0;
      }
      if (empty) {
        if (cur_.size() > best.size()) best = cur_;
      } else {
        std::vector<std::uint64_t> sub = np;
        expand(sub);
      }
      cur_.pop_back();
      clear_bit(p.data(), v);
      if (aborted) return;
    }
  }

  std::size_t n_, wpr_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t max_nodes_;
  std::vector<std::size_t> cur_;
};

}  // namespace

IndependenceResult independence_number(const ExplicitGraph& g, Budget budget,
                                       std::optional<std::size_t> pin_vertex) {
  if (budget.max_nodes == 0) throw DomainError("budget must be positive");
  IndependenceResult res;
  if (g.size() == 0) return res;

  std::vector<std::size_t> cand;
  if (pin_vertex) {
    if (*pin_vertex >= g.size()) throw DomainError("pin vertex out of range");
    for (std::size_t v = 0; v < g.size(); ++v)
      if (v != *pin_vertex && !g.adjacent(*pin_vertex, v)) cand.push_back(v);
  } else {
    cand.resize(g.size());
    std::iota(cand.begin(), cand.end(), std::size_t{0});
  }

  // Clique graph = complement restricted to the candidates.
  const std::size_t m = cand.size();
  std::vector<std::size_t> cdeg(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && !g.adjacent(cand[i], cand[j])) ++cdeg[i];
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return cdeg[a] > cdeg[b]; });

  const std::size_t wpr = words_for(m);
  std::vector<std::uint64_t> adj(m * wpr, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && !g.adjacent(cand[perm[i]], cand[perm[j]])) set_bit(adj.data() + i * wpr, j);

  CliqueSearch search(m, std::move(adj), budget.max_nodes);
  if (m > 0) search.run();

  for (std::size_t v : search.best) res.witness.push_back(cand[perm[v]]);
  if (pin_vertex) res.witness.push_back(*pin_vertex);
  std::sort(res.witness.begin(), res.witness.end());
  res.size = res.witness.size();
  res.exact = !search.aborted;
  res.nodes = search.nodes;
  return res;
}

IndependenceResult independence_number(const GraphSpec& spec, Budget budget) {
  if (total_bits(spec) > 14) throw DomainError("independence_number limited to 2^14 vertices");
  return independence_number(ExplicitGraph::from_spec(spec), budget, std::size_t{0});
}

bool is_independent(const ExplicitGraph& g, const std::vector<std::size_t>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
  return true;
}

Rat turan_lower_bound(const GraphSpec& spec) {
  std::visit([](const auto& s) { s.validate(); }, spec);
  const Int v = pow2(static_cast<unsigned>(total_bits(spec)));
  const Int e = v * spec_degree(spec) / 2;
  return make_rat(v * v, 2 * (e + v));
}

Rat turan_lower_bound(const ExplicitGraph& g) {
  if (g.size() == 0) return Rat(0);
  const Int v = static_cast<unsigned long>(g.size());
  const Int e = static_cast<unsigned long>(g.num_edges());
  return make_rat(v * v, 2 * (e + v));
}

// ---- homomorphisms -----------------------------------------------------------

namespace {

class HomSearch {
 public:
  HomSearch(const HammingGraphSpec& src, const HammingGraphSpec& dst, std::uint64_t max_nodes)
      : ns_(std::size_t{1} << src.n),
        nt_(std::size_t{1} << dst.n),
        wpr_(words_for(nt_)),
        max_nodes_(max_nodes),
        src_(src),
        dst_(dst) {
    for (Word z = 1; z < ns_; ++z)
      if (src.edge_difference(z)) src_gens_.push_back(z);
    dst_rows_ = kernels::cayley_adjacency_rows(dst.n, connection(dst));
    domains_.assign(ns_ * wpr_, 0);
    for (std::size_t v = 0; v < ns_; ++v)
      for (std::size_t t = 0; t < nt_; ++t) set_bit(dom(v), t);
    image_.assign(ns_, kUnset);
  }

  HomStatus run() {
    // Translations of the target are automorphisms: pin 0 -> 0.
    if (!assign(0, 0)) return HomStatus::None;
    const bool found = search();
    if (aborted_) return HomStatus::Undecided;
    return found ? HomStatus::Found : HomStatus::None;
  }

  std::vector<Word> images() const {
    return {image_.begin(), image_.end()};
  }
  std::uint64_t nodes = 0;

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  static std::vector<std::uint8_t> connection(const HammingGraphSpec& s) {
    std::vector<std::uint8_t> c(std::size_t{1} << s.n, 0);
    for (Word z = 1; z < c.size(); ++z) c[z] = s.edge_difference(z);
    return c;
  }

  std::uint64_t* dom(std::size_t v) { return domains_.data() + v * wpr_; }

  std::size_t dom_size(std::size_t v) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < wpr_; ++i) s += static_cast<std::size_t>(std::popcount(dom(v)[i]));
    return s;
  }

  // Sets image(v) = t and prunes neighbour domains, recording undo data.
  bool assign(std::size_t v, std::size_t t) {
    image_[v] = t;
    const std::uint64_t* allowed = dst_rows_.data() + t * wpr_;
    for (Word z : src_gens_) {
      const std::size_t u = v ^ z;
      if (image_[u] != kUnset) {
        if (!test_bit(allowed, image_[u])) return false;
        continue;
      }
      std::uint64_t* d = dom(u);
      bool changed = false, empty = true;
      for (std::size_t i = 0; i < wpr_; ++i) {
        if (d[i] & ~allowed[i]) changed = true;
      }
      if (changed) {
        trail_.emplace_back(u, std::vector<std::uint64_t>(d, d + wpr_));
        for (std::size_t i = 0; i < wpr_; ++i) d[i] &= allowed[i];
      }
      for (std::size_t i = 0; i < wpr_; ++i) empty = empty && d[i] == 0;
      if (empty) return false;
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto& [u, saved] = trail_.back();
      std::copy(saved.begin(), saved.end(), dom(u));
      trail_.pop_back();
    }
  }

  bool search() {
    std::size_t best = kUnset, best_size = kUnset;
    for (std::size_t v = 0; v < ns_; ++v) {
      if (image_[v] != kUnset) continue;
      const std::size_t s = dom_size(v);
      if (s < best_size) {
        best = v;
        best_size = s;
      }
    }
    if (best == kUnset) return true;
    std::vector<std::uint64_t> values(dom(best), dom(best) + wpr_);
    for (std::size_t wi = 0; wi < wpr_; ++wi) {
      for (std::uint64_t bits = values[wi]; bits; bits &= bits - 1) {
        if (++nodes > max_nodes_) {
          aborted_ = true;
          return false;
        }
        const std::size_t t = wi * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        const std::size_t mark = trail_.size();
        if (assign(best, t) && search()) return true;
        undo_to(mark);
        image_[best] = kUnset;
        if (aborted_) return false;
      }
    }
    return false;
  }

  std::size_t ns_, nt_, wpr_;
  std::uint64_t max_nodes_;
  HammingGraphSpec src_, dst_;
  std::vector<Word> src_gens_;
  std::vector<std::uint64_t> dst_rows_, domains_;
  std::vector<std::size_t> image_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> trail_;
  bool aborted_ = false;
};

}  // namespace

HomomorphismResult find_homomorphism(const HammingGraphSpec& src, const HammingGraphSpec& dst,
                                     Budget budget) {
  src.validate();
  dst.validate();
  if (src.n > 10) throw DomainError("homomorphism search limited to 2^10 source vertices");
  if (dst.n > 20) throw DomainError("homomorphism target too large");
  if (budget.max_nodes == 0) throw DomainError("budget must be positive");
  HomSearch search(src, dst, budget.max_nodes);
  HomomorphismResult res;
  res.status = search.run();
  res.nodes = search.nodes;
  if (res.status == HomStatus::Found) res.map = MapTable(src.n, dst.n, search.images());
  return res;
}

bool preserves_edges(const HammingGraphSpec& src, const HammingGraphSpec& dst, const MapTable& f) {
  if (f.k != src.n || f.n != dst.n) throw DomainError("map dimensions do not match graphs");
  for (Word x = 0; x < f.size(); ++x)
    for (Word y = x + 1; y < f.size(); ++y)
      if (src.edge_difference(x ^ y) && !dst.edge_difference(f(x) ^ f(y))) return false;
  return true;
}

// ---- odd girth ----------------------------------------------------------------

std::optional<int> odd_girth(const GraphSpec& spec) {
  if (total_bits(spec) > 14) throw DomainError("odd_girth limited to 2^14 vertices");
  const CayleyGraph g(spec);
  const auto& gens = g.generators();
  std::vector<int> level(g.num_vertices(), -1);
  std::vector<Word> frontier{0}, next;
  level[0] = 0;
  for (int L = 0; !frontier.empty(); ++L) {
    for (Word a : frontier)
      for (Word z : gens)
        if (level[a ^ z] == L) return 2 * L + 1;
    next.clear();
    for (Word a : frontier)
      for (Word z : gens)
        if (level[a ^ z] < 0) {
          level[a ^ z] = L + 1;
          next.push_back(a ^ z);
        }
    frontier.swap(next);
  }
  return std::nullopt;
}

namespace {
std::optional<int> girth_from(int w) {
  if (w == kernels::kNoPair) return std::nullopt;
  return w;
}
std::vector<std::size_t> all_vertices(std::size_t n) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  return s;
}
std::span<const std::uint64_t> rows_of(const ExplicitGraph& g) {
  return {g.row(0), g.size() * g.words_per_row()};
}
}  // namespace

std::optional<int> odd_girth(const ExplicitGraph& g) {
  if (g.size() == 0) return std::nullopt;
  const auto src = all_vertices(g.size());
  return girth_from(kernels::min_odd_walk(rows_of(g), g.size(), g.words_per_row(), src));
}

std::optional<int> odd_girth_serial(const ExplicitGraph& g) {
  if (g.size() == 0) return std::nullopt;
  const auto src = all_vertices(g.size());
  return girth_from(kernels::min_odd_walk_serial(rows_of(g), g.size(), g.words_per_row(), src));
}

// ---- walks ---------------------------------------------------------------------

Rat closed_walk_count(int n, int d, int m) {
  if (n < 0 || d < 0 || d > n) throw DomainError("closed_walk_count needs 0 <= d <= n");
  if (m < 1) throw DomainError("closed_walk_count needs m >= 1");
  const auto& K = KrawtchoukTable::of(n);
  const Int N = pow2(static_cast<unsigned>(n));
  Int total = 0;
  for (int x = 0; x <= n; ++x) {
    Int eig = x == 0 ? N : Int(0);
    for (int j = 0; j <= d; ++j) eig -= K(j, x);
    Int p;
    mpz_pow_ui(p.get_mpz_t(), eig.get_mpz_t(), static_cast<unsigned long>(m));
    total += binomial(n, x) * p;
  }
  return make_rat(total, N);
}

}  // namespace hmaps
