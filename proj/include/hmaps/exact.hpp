#pragma once

// Exact integer/rational arithmetic and the binary Krawtchouk machinery.
//
// Distance functions on F_2^n are carried in two representations:
//   point values   f(x),    x = 0..n
//   spectrum       fhat(j), j = 0..n
// related by
//   f(x)    = 2^{-n} sum_j fhat(j) K_j(x)
//   fhat(j) = sum_x f(x) K_x(j)
// which are mutually inverse by Krawtchouk orthogonality.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmaps {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when an argument lies outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical rational p/q. Throws DomainError if q == 0.
Rat make_rat(const Int& p, const Int& q = 1);

/// Parses "p/q", "p" or a finite decimal such as "0.75" into an exact rational.
Rat parse_rat(const std::string& text);

/// Always "p/q" (denominator printed even when it is 1).
std::string to_string(const Rat& r);

/// 2^e as an exact integer.
Int pow2(unsigned e);

/// Binomial coefficient; zero outside 0 <= k <= n.
Int binomial(long n, long k);

/// Pascal triangle rows 0..n, exact.
class BinomialTable {
 public:
  explicit BinomialTable(int n);
  int n() const { return n_; }
  const Int& operator()(int m, int k) const;  // C(m,k), 0 <= k <= m <= n
 private:
  int n_;
  std::vector<std::vector<Int>> rows_;
};

/// K_j^{(n)}(x) = sum_k (-1)^k C(x,k) C(n-x,j-k).
Int krawtchouk(int n, int j, int x);

/// Immutable (n+1)x(n+1) table, entry (j,x) = K_j^{(n)}(x).
class KrawtchoukTable {
 public:
  explicit KrawtchoukTable(int n);

  int n() const { return n_; }
  const Int& operator()(int j, int x) const { return values_[index(j, x)]; }

  /// Table for this n, cached per thread.
  static const KrawtchoukTable& of(int n);

 private:
  std::size_t index(int j, int x) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(x);
  }
  int n_;
  std::vector<Int> values_;
};

/// A distance function represented by its Krawtchouk spectrum fhat(0..n).
struct SpectrumPoly {
  int n = 0;
  std::vector<Rat> coeffs;

  SpectrumPoly() = default;
  SpectrumPoly(int n_, std::vector<Rat> c);

  static SpectrumPoly zero(int n);
  /// Spectrum of the indicator of x = 0 (all ones).
  static SpectrumPoly delta(int n);

  /// Point values f(0..n).
  std::vector<Rat> values() const;
};

/// f(x) = 2^{-n} sum_j p.coeffs[j] K_j(x).
Rat evaluate_spectrum(const SpectrumPoly& p, int x);

/// Inverse of evaluate_spectrum: fhat(j) = sum_x values[x] K_x(j).
SpectrumPoly spectrum_of_values(int n, std::span<const Rat> values);

}  // namespace hmaps
