#pragma once

// Bivariate LP for theta_S of Hbar(k,a) ltimes Hbar(n,b) and
// Hbar(k,a) boxtimes H(n,b), product dual certificates, and the explicit
// strong-product certificate built from a primal for G-bar and a dual for H.

#include "hmaps/delsarte.hpp"
#include "hmaps/exact.hpp"
#include "hmaps/graphs.hpp"

#include <string>
#include <vector>

namespace hmaps {

/// fhat(i,j), i = 0..k, j = 0..n, stored row-major.
struct BiSpectrumPoly {
  int k = 0;
  int n = 0;
  std::vector<Rat> coeffs;

  BiSpectrumPoly() = default;
  BiSpectrumPoly(int k_, int n_, std::vector<Rat> c);

  const Rat& at(int i, int j) const { return coeffs[index(i, j)]; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(j);
  }
  /// f(x,y) = 2^{-k-n} sum fhat(i,j) K_i(x) K_j(y), row-major.
  std::vector<Rat> values() const;
};

/// Edge set D and non-edge set D^c of the product over weight pairs (x,y).
struct DomainSets {
  int k = 0, n = 0, a = 0, b = 0;
  ProductKind kind = ProductKind::Homomorphic;

  /// (x,y) in D: homomorphic (x=0, y!=0) or (x>a, y<=b);
  /// strong (x=0 or x>a) and y<=b, excluding (0,0).
  bool in_d(int x, int y) const;
  /// Complement of D within the grid minus (0,0).
  bool in_dc(int x, int y) const { return !(x == 0 && y == 0) && !in_d(x, y); }
  /// The product graph these sets describe.
  ProductGraphSpec graph() const;
};

struct ProductThetaResult {
  DomainSets sets;
  Rat value;
  BiSpectrumPoly primal;  // f(0,0) = 1
  BiSpectrumPoly dual;    // ghat(0,0) = 1
};

ProductThetaResult theta_s_product(int k, int a, int n, int b, ProductKind kind);

std::string check_product_primal(const DomainSets& s, const BiSpectrumPoly& fhat);
std::string check_product_dual(const DomainSets& s, const BiSpectrumPoly& ghat);
/// 2^{k+n} g(0,0) / ghat(0,0).
Rat product_dual_bound(const BiSpectrumPoly& ghat);

/// g(x,y) = f1(x) g1(y) with f1 primal for H(k,a), g1 dual for H(n,b).
/// Returns 2^{k+n} f1(0)/f1hat(0) * g1(0)/g1hat(0); throws DomainError naming
/// the violated constraint if a factor or the product is infeasible.
Rat product_dual_from_factors(const SpectrumPoly& f1, int a, const SpectrumPoly& g1, int b,
                              ProductKind kind = ProductKind::Homomorphic);

/// Dense symmetric rational matrix, row-major.
struct RatMatrix {
  std::size_t dim = 0;
  std::vector<Rat> data;

  explicit RatMatrix(std::size_t d = 0) : dim(d), data(d * d, Rat(0)) {}
  Rat& operator()(std::size_t i, std::size_t j) { return data[i * dim + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
};

struct PsdReport {
  bool psd = false;
  std::size_t rank = 0;
  std::vector<Rat> pivots;  // diagonal of D in A = L D L^T, zero pivots included
  std::string failure;      // first obstruction when !psd
};

/// Exact LDL^T with zero-pivot handling; a zero pivot requires a zero row.
PsdReport check_psd(RatMatrix a);

struct CertifiedMatrixBound {
  HammingGraphSpec g, h;
  Rat theta_g_bar, theta_h;
  Rat c1, c2;           // c1 is the bound on theta_S(G boxtimes H)
  RatMatrix m;          // primal optimiser for theta_S(G-bar), |V(G)| square
  RatMatrix c;          // dual optimiser for theta_S(H), lambda_max(C) = theta_h
  RatMatrix c_hat;      // index x * 2^{h.n} + y
  bool entrywise_ok = false;
  PsdReport psd;        // of c1 I - c_hat
};

/// Needs g.n + h.n <= 12. Throws std::logic_error if either check fails.
CertifiedMatrixBound compose_lemma1_certificate(const HammingGraphSpec& g, const HammingGraphSpec& h);

}  // namespace hmaps
