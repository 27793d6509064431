#include "hmaps/product_lp.hpp"

#include "scheme_lp.hpp"

namespace hmaps {

BiSpectrumPoly::BiSpectrumPoly(int k_, int n_, std::vector<Rat> c) : k(k_), n(n_), coeffs(std::move(c)) {
  if (k < 0 || n < 0) throw DomainError("negative dimension");
  if (coeffs.size() != static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(n + 1))
    throw DomainError("bivariate spectrum must have (k+1)(n+1) entries");
}

std::vector<Rat> BiSpectrumPoly::values() const { return detail::Scheme({k, n}).inverse(coeffs); }

bool DomainSets::in_d(int x, int y) const {
  if (x == 0 && y == 0) return false;
  if (kind == ProductKind::Homomorphic) return (x == 0 && y != 0) || (x > a && y <= b);
  return (x == 0 || x > a) && y <= b;
}

ProductGraphSpec DomainSets::graph() const {
  ProductGraphSpec p{HammingGraphSpec::complement(k, a),
                     kind == ProductKind::Homomorphic ? HammingGraphSpec::complement(n, b)
                                                      : HammingGraphSpec::hamming(n, b),
                     kind};
  return p;
}

namespace {

void validate(const DomainSets& s) {
  if (s.k < 0 || s.n < 0 || s.a < 0 || s.a > s.k || s.b < 0 || s.b > s.n)
    throw DomainError("product LP needs 0 <= a <= k and 0 <= b <= n");
  if ((s.k + 1) * (s.n + 1) > 600) throw DomainError("product LP limited to (k+1)(n+1) <= 600");
}

std::vector<bool> edge_mask(const DomainSets& s) {
  std::vector<bool> e;
  for (int x = 0; x <= s.k; ++x)
    for (int y = 0; y <= s.n; ++y) e.push_back(s.in_d(x, y));
  return e;
}

}  // namespace

ProductThetaResult theta_s_product(int k, int a, int n, int b, ProductKind kind) {
  DomainSets sets{k, n, a, b, kind};
  validate(sets);
  const detail::Scheme s({k, n});
  auto sol = detail::solve_theta(s, edge_mask(sets));
  ProductThetaResult r{sets, sol.value, BiSpectrumPoly(k, n, std::move(sol.fhat)),
                       BiSpectrumPoly(k, n, std::move(sol.ghat))};
  if (auto e = check_product_primal(sets, r.primal); !e.empty()) throw std::logic_error("product primal: " + e);
  if (auto e = check_product_dual(sets, r.dual); !e.empty()) throw std::logic_error("product dual: " + e);
  if (product_dual_bound(r.dual) != r.value) throw std::logic_error("product LP duality gap");
  return r;
}

std::string check_product_primal(const DomainSets& s, const BiSpectrumPoly& fhat) {
  validate(s);
  if (fhat.k != s.k || fhat.n != s.n) return "primal spectrum has wrong shape";
  return detail::check_primal(detail::Scheme({s.k, s.n}), edge_mask(s), fhat.coeffs);
}

std::string check_product_dual(const DomainSets& s, const BiSpectrumPoly& ghat) {
  validate(s);
  if (ghat.k != s.k || ghat.n != s.n) return "dual spectrum has wrong shape";
  return detail::check_dual(detail::Scheme({s.k, s.n}), edge_mask(s), ghat.coeffs);
}

Rat product_dual_bound(const BiSpectrumPoly& ghat) {
  if (sgn(ghat.at(0, 0)) <= 0) throw DomainError("dual ghat(0,0) must be positive");
  return detail::dual_bound(detail::Scheme({ghat.k, ghat.n}), ghat.coeffs);
}

Rat product_dual_from_factors(const SpectrumPoly& f1, int a, const SpectrumPoly& g1, int b, ProductKind kind) {
  const int k = f1.n, n = g1.n;
  if (a < 0 || a > k || b < 0 || b > n) throw DomainError("factor radii out of range");
  if (auto e = check_primal(HammingGraphSpec::hamming(k, a), f1); !e.empty())
    throw DomainError("f1 is not primal feasible: " + e);
  if (auto e = check_dual(HammingGraphSpec::hamming(n, b), g1); !e.empty())
    throw DomainError("g1 is not dual feasible: " + e);
  std::vector<Rat> c;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= n; ++j) c.push_back(f1.coeffs[static_cast<std::size_t>(i)] * g1.coeffs[static_cast<std::size_t>(j)]);
  const BiSpectrumPoly ghat(k, n, std::move(c));
  const DomainSets sets{k, n, a, b, kind};
  if (auto e = check_product_dual(sets, ghat); !e.empty())
    throw DomainError("product g(x,y) = f1(x) g1(y) infeasible: " + e);
  return product_dual_bound(ghat);
}

PsdReport check_psd(RatMatrix a) {
  PsdReport rep;
  const std::size_t d = a.dim;
  for (std::size_t k = 0; k < d; ++k) {
    const Rat p = a(k, k);
    rep.pivots.push_back(p);
    if (sgn(p) < 0) {
      rep.failure = "negative pivot at " + std::to_string(k);
      return rep;
    }
    if (sgn(p) == 0) {
      for (std::size_t j = k + 1; j < d; ++j)
        if (sgn(a(k, j)) != 0) {
          rep.failure = "zero pivot with nonzero row at " + std::to_string(k);
          return rep;
        }
      continue;
    }
    ++rep.rank;
    // Upper triangle only; a(i,k) == a(k,i) by symmetry.
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t ii = static_cast<std::int64_t>(k) + 1; ii < static_cast<std::int64_t>(d); ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (sgn(a(k, i)) == 0) continue;
      const Rat factor = a(k, i) / p;
      for (std::size_t j = i; j < d; ++j)
        if (sgn(a(k, j)) != 0) a(i, j) -= factor * a(k, j);
    }
  }
  rep.psd = true;
  return rep;
}

CertifiedMatrixBound compose_lemma1_certificate(const HammingGraphSpec& g, const HammingGraphSpec& h) {
  g.validate();
  h.validate();
  if (g.n + h.n > 12) throw DomainError("explicit certificate limited to 2^12 vertices");
  const std::size_t ng = std::size_t{1} << g.n, nh = std::size_t{1} << h.n;

  HammingGraphSpec gbar = g;
  gbar.complemented = !g.complemented;
  const ThetaResult tg = theta_s(gbar);
  const ThetaResult th = theta_s(h);

  CertifiedMatrixBound out{g, h, tg.value, th.value, {}, {}, RatMatrix(ng), RatMatrix(nh), RatMatrix(ng * nh), false, {}};
  out.c1 = th.value * Rat(static_cast<unsigned long>(ng)) / tg.value;
  out.c2 = Rat(static_cast<unsigned long>(ng * ng)) / tg.value;

  // M_{u,v} = f(|u-v|) / |V(G)|: trace 1, tr JM = fhat(0), eigenvalues fhat/|V(G)| >= 0.
  const auto f = tg.primal.values();
  for (Word u = 0; u < ng; ++u)
    for (Word v = 0; v < ng; ++v)
      out.m(u, v) = f[static_cast<std::size_t>(distance(u, v))] / Rat(static_cast<unsigned long>(ng));
  // C = theta I - D + J with D_{u,v} = |V(H)| g(|u-v|): eigenvalues theta on the
  // constant vector and theta - |V(H)| ghat(j) elsewhere.
  const auto gv = th.dual.values();
  RatMatrix dmat(nh);
  for (Word u = 0; u < nh; ++u)
    for (Word v = 0; v < nh; ++v) {
      dmat(u, v) = Rat(static_cast<unsigned long>(nh)) * gv[static_cast<std::size_t>(distance(u, v))];
      out.c(u, v) = (u == v ? th.value : Rat(0)) - dmat(u, v) + 1;
    }

  for (Word u = 0; u < ng; ++u) {
    Rat row = 0;
    for (Word v = 0; v < ng; ++v) row += out.m(u, v);
    if (out.m(u, u) != make_rat(1, static_cast<unsigned long>(ng)) || row != tg.value / Rat(static_cast<unsigned long>(ng)))
      throw std::logic_error("primal matrix M is not symmetrised");
    for (Word v = 0; v < ng; ++v)
      if (sgn(out.m(u, v)) < 0 || (u != v && gbar.edge_difference(u ^ v) && sgn(out.m(u, v)) != 0))
        throw std::logic_error("primal matrix M violates its sign pattern");
  }
  for (Word u = 0; u < nh; ++u)
    for (Word v = 0; v < nh; ++v)
      if (!h.edge_difference(u ^ v) && out.c(u, v) < 1) throw std::logic_error("dual matrix C below 1 off the edges");

  // C_hat = c1 I - c2 M (x) D + J; c1 I - C_hat = c2 M (x) D - J.
  const std::size_t dim = ng * nh;
  RatMatrix slack(dim);
  out.entrywise_ok = true;
  for (std::size_t i = 0; i < dim; ++i) {
    const Word x = i / nh, y = i % nh;
    for (std::size_t j = 0; j < dim; ++j) {
      const Word x2 = j / nh, y2 = j % nh;
      const Rat md = out.c2 * out.m(x, x2) * dmat(y, y2);
      out.c_hat(i, j) = (i == j ? out.c1 : Rat(0)) - md + 1;
      slack(i, j) = md - 1;
      const bool non_edge = i == j || (x != x2 && !g.edge_difference(x ^ x2)) || (y != y2 && !h.edge_difference(y ^ y2));
      if (non_edge && out.c_hat(i, j) < 1) out.entrywise_ok = false;
    }
  }
  if (!out.entrywise_ok) throw std::logic_error("composed certificate fails the entrywise check");
  out.psd = check_psd(std::move(slack));
  if (!out.psd.psd) throw std::logic_error("c1 I - C_hat is not PSD: " + out.psd.failure);
  return out;
}

}  // namespace hmaps
