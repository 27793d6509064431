#pragma once

// Distance-class LP shared by the univariate and bivariate programs.
// A class is a tuple of block weights (c_1..c_t) over F_2^{dims_1} x ... ;
// eigenvalues are products of Krawtchouk values.

#include "hmaps/exact.hpp"

#include <string>
#include <vector>

namespace hmaps::detail {

class Scheme {
 public:
  explicit Scheme(std::vector<int> dims);

  std::size_t size() const { return size_; }
  unsigned total_bits() const { return bits_; }
  const std::vector<int>& dims() const { return dims_; }
  /// prod_t K^{(dims_t)}_{a_t}(b_t).
  const Int& kraw(std::size_t a, std::size_t b) const { return p_[a * size_ + b]; }
  const Int& valency(std::size_t c) const { return p_[c * size_]; }
  std::vector<int> unflatten(std::size_t c) const;

  /// fhat(e) = sum_c f(c) K_c(e).
  std::vector<Rat> forward(const std::vector<Rat>& f) const;
  /// f(c) = 2^{-N} sum_e fhat(e) K_e(c).
  std::vector<Rat> inverse(const std::vector<Rat>& fhat) const;

 private:
  std::vector<int> dims_;
  std::size_t size_;
  unsigned bits_;
  std::vector<Int> p_;
};

struct SchemeTheta {
  Rat value;
  std::vector<Rat> fhat;  // f(0) = 1
  std::vector<Rat> ghat;  // ghat(0) = 1
};

/// edge[c] marks classes joined by an edge; edge[0] must be false.
SchemeTheta solve_theta(const Scheme& s, const std::vector<bool>& edge);

std::string check_primal(const Scheme& s, const std::vector<bool>& edge, const std::vector<Rat>& fhat);
std::string check_dual(const Scheme& s, const std::vector<bool>& edge, const std::vector<Rat>& ghat);
Rat dual_bound(const Scheme& s, const std::vector<Rat>& ghat);

}  // namespace hmaps::detail
