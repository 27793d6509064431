#include "hmaps/delsarte.hpp"

#include "scheme_lp.hpp"

#include <memory>

namespace hmaps {

namespace {

std::vector<bool> edge_mask(const HammingGraphSpec& g) {
  std::vector<bool> e(static_cast<std::size_t>(g.n) + 1, false);
  for (int x = 1; x <= g.n; ++x) e[static_cast<std::size_t>(x)] = g.complemented ? x > g.d : x <= g.d;
  return e;
}

const detail::Scheme& scheme_of(int n) {
  thread_local std::vector<std::unique_ptr<detail::Scheme>> cache;
  if (cache.size() <= static_cast<std::size_t>(n)) cache.resize(static_cast<std::size_t>(n) + 1);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (!slot) slot = std::make_unique<detail::Scheme>(std::vector<int>{n});
  return *slot;
}

}  // namespace

ThetaResult theta_s(const HammingGraphSpec& g) {
  g.validate();
  const auto& s = scheme_of(g.n);
  auto sol = detail::solve_theta(s, edge_mask(g));
  ThetaResult r{g, sol.value, SpectrumPoly(g.n, std::move(sol.fhat)), SpectrumPoly(g.n, std::move(sol.ghat))};
  if (auto err = check_theta(r); !err.empty()) throw std::logic_error("theta certificate: " + err);
  return r;
}

ThetaResult theta_s_hamming(int n, int d) { return theta_s(HammingGraphSpec::hamming(n, d)); }

std::string check_primal(const HammingGraphSpec& g, const SpectrumPoly& fhat) {
  if (fhat.n != g.n) return "primal spectrum has wrong n";
  return detail::check_primal(scheme_of(g.n), edge_mask(g), fhat.coeffs);
}

std::string check_dual(const HammingGraphSpec& g, const SpectrumPoly& ghat) {
  if (ghat.n != g.n) return "dual spectrum has wrong n";
  return detail::check_dual(scheme_of(g.n), edge_mask(g), ghat.coeffs);
}

Rat dual_bound(const SpectrumPoly& ghat) {
  if (sgn(ghat.coeffs.at(0)) <= 0) throw DomainError("dual ghat(0) must be positive");
  return detail::dual_bound(scheme_of(ghat.n), ghat.coeffs);
}

std::string check_theta(const ThetaResult& r) {
  if (auto e = check_primal(r.graph, r.primal); !e.empty()) return e;
  if (auto e = check_dual(r.graph, r.dual); !e.empty()) return e;
  if (r.primal.coeffs[0] != r.value) return "primal value differs from reported value";
  if (dual_bound(r.dual) != r.value) return "dual bound differs from primal value";
  return {};
}

PlotkinDual plotkin_dual(int n, int d) {
  if (n < 0 || d < 0 || d > n) throw DomainError("plotkin_dual needs 0 <= d <= n");
  if (2 * d + 2 <= n) throw DomainError("plotkin_dual needs 2d+2 > n");
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
  const Int N = pow2(static_cast<unsigned>(n));
  c[0] = Rat(N * (2 * d + 2 - n));
  if (n >= 1) c[1] = Rat(N);
  PlotkinDual p{SpectrumPoly(n, std::move(c)), make_rat(2 * (d + 1), 2 * d + 2 - n)};
  if (auto e = check_dual(HammingGraphSpec::hamming(n, d), p.ghat); !e.empty())
    throw std::logic_error("Plotkin certificate: " + e);
  if (dual_bound(p.ghat) != p.bound) throw std::logic_error("Plotkin certificate value mismatch");
  return p;
}

LevenshteinPrimal levenshtein_primal(int n, int d) {
  if (n < 1 || d < 0 || d >= n) throw DomainError("levenshtein_primal needs 0 <= d < n");
  if (d % 2 == 0) throw DomainError("levenshtein_primal needs odd d (route even d through d+1)");
  if (2 * d + 2 <= n) throw DomainError("levenshtein_primal needs 2d+2 > n");
  const auto& K = KrawtchoukTable::of(n);
  LevenshteinPrimal out;
  out.r = make_rat(n, 2 * d + 2 - n);
  const Rat scale = out.r / Rat(binomial(n, d + 1));
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  out.feasible = true;
  for (int w = 0; w <= n; ++w) {
    c[static_cast<std::size_t>(w)] = 1 + scale * K(d + 1, w);
    if (sgn(c[static_cast<std::size_t>(w)]) < 0) out.feasible = false;
  }
  out.fhat = SpectrumPoly(n, std::move(c));
  out.bound = 1 + out.r;
  return out;
}

}  // namespace hmaps
