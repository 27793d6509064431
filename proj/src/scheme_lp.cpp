#include "scheme_lp.hpp"

#include "hmaps/simplex.hpp"

namespace hmaps::detail {

Scheme::Scheme(std::vector<int> dims) : dims_(std::move(dims)), size_(1), bits_(0) {
  for (int d : dims_) {
    if (d < 0) throw DomainError("negative block length");
    size_ *= static_cast<std::size_t>(d) + 1;
    bits_ += static_cast<unsigned>(d);
  }
  p_.assign(size_ * size_, Int(1));
  for (std::size_t a = 0; a < size_; ++a) {
    const auto ia = unflatten(a);
    for (std::size_t b = 0; b < size_; ++b) {
      const auto ib = unflatten(b);
      Int v = 1;
      for (std::size_t t = 0; t < dims_.size(); ++t) v *= KrawtchoukTable::of(dims_[t])(ia[t], ib[t]);
      p_[a * size_ + b] = v;
    }
  }
}

std::vector<int> Scheme::unflatten(std::size_t c) const {
  std::vector<int> idx(dims_.size());
  for (std::size_t t = dims_.size(); t-- > 0;) {
    const auto w = static_cast<std::size_t>(dims_[t]) + 1;
    idx[t] = static_cast<int>(c % w);
    c /= w;
  }
  return idx;
}

std::vector<Rat> Scheme::forward(const std::vector<Rat>& f) const {
  if (f.size() != size_) throw DomainError("value vector has wrong length");
  std::vector<Rat> out(size_, Rat(0));
  for (std::size_t e = 0; e < size_; ++e)
    for (std::size_t c = 0; c < size_; ++c)
      if (sgn(f[c]) != 0) out[e] += f[c] * kraw(c, e);
  return out;
}

std::vector<Rat> Scheme::inverse(const std::vector<Rat>& fhat) const {
  if (fhat.size() != size_) throw DomainError("spectrum has wrong length");
  const Rat scale = make_rat(1, pow2(bits_));
  std::vector<Rat> out(size_, Rat(0));
  for (std::size_t c = 0; c < size_; ++c) {
    for (std::size_t e = 0; e < size_; ++e)
      if (sgn(fhat[e]) != 0) out[c] += fhat[e] * kraw(e, c);
    out[c] *= scale;
  }
  return out;
}

SchemeTheta solve_theta(const Scheme& s, const std::vector<bool>& edge) {
  const std::size_t m = s.size();
  if (edge.size() != m || edge[0]) throw DomainError("edge mask must cover every class and exclude 0");
  std::vector<std::size_t> vars;
  for (std::size_t c = 1; c < m; ++c)
    if (!edge[c]) vars.push_back(c);

  std::vector<Rat> f(m, Rat(0)), u(m, Rat(0));
  f[0] = 1;
  if (!vars.empty()) {
    ExactLP lp;
    lp.direction = Direction::Maximize;
    for (std::size_t c : vars) lp.objective.emplace_back(s.valency(c));
    for (std::size_t e = 0; e < m; ++e) {
      std::vector<Rat> row;
      row.reserve(vars.size());
      for (std::size_t c : vars) row.emplace_back(-Rat(s.kraw(c, e)));
      lp.add_row(std::move(row), Sense::LessEq, Rat(1));
    }
    const ExactLPSolution sol = solve(lp);
    if (sol.status != LPStatus::Optimal) throw std::logic_error("theta LP did not reach an optimum");
    for (std::size_t i = 0; i < vars.size(); ++i) f[vars[i]] = sol.primal[i];
    u = sol.dual;
  }

  SchemeTheta r;
  r.fhat = s.forward(f);
  r.value = r.fhat[0];
  r.ghat.assign(m, Rat(0));
  const Rat g0 = 1 + u[0];
  r.ghat[0] = 1;
  for (std::size_t e = 1; e < m; ++e) r.ghat[e] = u[e] / Rat(s.valency(e)) / g0;
  return r;
}

std::string check_primal(const Scheme& s, const std::vector<bool>& edge, const std::vector<Rat>& fhat) {
  if (fhat.size() != s.size()) return "primal spectrum has wrong length";
  for (std::size_t e = 0; e < s.size(); ++e)
    if (sgn(fhat[e]) < 0) return "primal spectrum negative at index " + std::to_string(e);
  const auto f = s.inverse(fhat);
  if (f[0] != 1) return "primal f(0) != 1";
  for (std::size_t c = 1; c < s.size(); ++c) {
    if (edge[c] && sgn(f[c]) != 0) return "primal f nonzero on edge class " + std::to_string(c);
    if (sgn(f[c]) < 0) return "primal f negative at class " + std::to_string(c);
  }
  return {};
}

std::string check_dual(const Scheme& s, const std::vector<bool>& edge, const std::vector<Rat>& ghat) {
  if (ghat.size() != s.size()) return "dual spectrum has wrong length";
  if (sgn(ghat[0]) <= 0) return "dual ghat(0) must be positive";
  for (std::size_t e = 0; e < s.size(); ++e)
    if (sgn(ghat[e]) < 0) return "dual spectrum negative at index " + std::to_string(e);
  const auto g = s.inverse(ghat);
  for (std::size_t c = 1; c < s.size(); ++c)
    if (!edge[c] && sgn(g[c]) > 0) return "dual g positive on non-edge class " + std::to_string(c);
  return {};
}

Rat dual_bound(const Scheme& s, const std::vector<Rat>& ghat) {
  const auto g = s.inverse(ghat);
  return Rat(pow2(s.total_bits())) * g[0] / ghat[0];
}

}  // namespace hmaps::detail
