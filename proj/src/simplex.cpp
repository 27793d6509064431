#include "hmaps/simplex.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace hmaps {

void ExactLP::add_row(std::vector<Rat> coeffs, Sense sense, Rat b) {
  rows.push_back(std::move(coeffs));
  senses.push_back(sense);
  rhs.push_back(std::move(b));
}

void ExactLP::validate() const {
  if (rows.size() != senses.size() || rows.size() != rhs.size())
    throw DomainError("ExactLP: rows, senses and rhs differ in length");
  for (const auto& r : rows)
    if (r.size() != objective.size()) throw DomainError("ExactLP: row width != number of variables");
  if (!free_variable.empty() && free_variable.size() != objective.size())
    throw DomainError("ExactLP: free_variable flags != number of variables");
}

namespace {

// Standard form: maximize c.x subject to A x = b, x >= 0, b >= 0, with
// columns [structural | slack/surplus | artificial].
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t cols) : m_(m), cols_(cols), a_(m, std::vector<Rat>(cols + 1)) {}

  Rat& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r][c]; }
  Rat& rhs(std::size_t r) { return a_[r][cols_]; }
  const Rat& rhs(std::size_t r) const { return a_[r][cols_]; }

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return cols_; }

  std::vector<std::size_t> basis;

  void pivot(std::size_t pr, std::size_t pc) {
    Rat inv = 1 / a_[pr][pc];
    for (auto& v : a_[pr])
      if (v != 0) v *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr) continue;
      Rat f = a_[r][pc];
      if (f == 0) continue;
      const auto& prow = a_[pr];
      auto& row = a_[r];
      for (std::size_t c = 0; c <= cols_; ++c)
        if (prow[c] != 0) row[c] -= f * prow[c];
    }
    basis[pr] = pc;
  }

  // Reduced costs d_j = c_j - c_B B^{-1} A_j for all columns.
  std::vector<Rat> reduced_costs(const std::vector<Rat>& cost) const {
    std::vector<Rat> d(cost.begin(), cost.end());
    for (std::size_t r = 0; r < m_; ++r) {
      const Rat& cb = cost[basis[r]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c)
        if (a_[r][c] != 0) d[c] -= cb * a_[r][c];
    }
    return d;
  }

 private:
  std::size_t m_, cols_;
  std::vector<std::vector<Rat>> a_;
};

enum class PhaseResult { Optimal, Unbounded };

// Bland's rule: lowest-index improving column, ties in the ratio test broken
// by lowest basic-variable index.
PhaseResult run_phase(Tableau& t, const std::vector<Rat>& cost, const std::vector<bool>& allowed,
                      std::size_t& pivots) {
  for (;;) {
    auto d = t.reduced_costs(cost);
    std::optional<std::size_t> enter;
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (allowed[c] && d[c] > 0) {
        enter = c;
        break;
      }
    }
    if (!enter) return PhaseResult::Optimal;
    std::optional<std::size_t> leave;
    Rat best;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const Rat& a = t.at(r, *enter);
      if (a <= 0) continue;
      Rat ratio = t.rhs(r) / a;
      if (!leave || ratio < best || (ratio == best && t.basis[r] < t.basis[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (!leave) return PhaseResult::Unbounded;
    t.pivot(*leave, *enter);
    ++pivots;
  }
}

}  // namespace

ExactLPSolution solve(const ExactLP& lp) {
  lp.validate();
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_rows();
  const bool maximize = lp.direction == Direction::Maximize;
  auto is_free = [&](std::size_t j) { return !lp.free_variable.empty() && lp.free_variable[j]; };

  // Structural columns: x_j (or x_j^+, x_j^- for free variables).
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = ncols++;
    if (is_free(j)) neg_col[j] = ncols++;
  }

  // Row normalisation so that rhs >= 0.
  std::vector<int> row_sign(m, 1);
  std::vector<Sense> sense(lp.senses);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.rhs[i] < 0) {
      row_sign[i] = -1;
      if (sense[i] == Sense::LessEq) sense[i] = Sense::GreaterEq;
      else if (sense[i] == Sense::GreaterEq) sense[i] = Sense::LessEq;
    }
  }
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (sense[i] != Sense::Equal) slack_col[i] = ncols++;
  std::vector<std::size_t> art_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (sense[i] != Sense::LessEq) art_col[i] = ncols++;

  Tableau t(m, ncols);
  t.basis.resize(m);
  std::vector<std::size_t> initial_basic(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Rat s = row_sign[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& a = lp.rows[i][j];
      if (a == 0) continue;
      t.at(i, pos_col[j]) = s * a;
      if (neg_col[j] != SIZE_MAX) t.at(i, neg_col[j]) = -s * a;
    }
    if (slack_col[i] != SIZE_MAX) t.at(i, slack_col[i]) = sense[i] == Sense::LessEq ? 1 : -1;
    if (art_col[i] != SIZE_MAX) t.at(i, art_col[i]) = 1;
    t.rhs(i) = s * lp.rhs[i];
    initial_basic[i] = sense[i] == Sense::LessEq ? slack_col[i] : art_col[i];
    t.basis[i] = initial_basic[i];
  }

  ExactLPSolution sol;
  std::vector<bool> is_art(ncols, false);
  for (auto c : art_col)
    if (c != SIZE_MAX) is_art[c] = true;

  // Phase 1.
  bool any_art = false;
  for (auto c : art_col) any_art = any_art || c != SIZE_MAX;
  if (any_art) {
    std::vector<Rat> cost1(ncols, Rat(0));
    for (std::size_t c = 0; c < ncols; ++c)
      if (is_art[c]) cost1[c] = -1;
    std::vector<bool> allowed(ncols, true);
    run_phase(t, cost1, allowed, sol.pivots);
    Rat infeas = 0;
    for (std::size_t r = 0; r < m; ++r)
      if (is_art[t.basis[r]]) infeas += t.rhs(r);
    if (infeas != 0) {
      sol.status = LPStatus::Infeasible;
      return sol;
    }
    // Drive zero-level artificials out where possible; rows where that fails
    // are redundant and keep their artificial at zero.
    for (std::size_t r = 0; r < m; ++r) {
      if (!is_art[t.basis[r]]) continue;
      for (std::size_t c = 0; c < ncols; ++c) {
        if (!is_art[c] && t.at(r, c) != 0) {
          t.pivot(r, c);
          ++sol.pivots;
          break;
        }
      }
    }
  }

  // Phase 2.
  std::vector<Rat> cost(ncols, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rat c = maximize ? lp.objective[j] : Rat(-lp.objective[j]);
    cost[pos_col[j]] = c;
    if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -c;
  }
  std::vector<bool> allowed(ncols, true);
  for (std::size_t c = 0; c < ncols; ++c) allowed[c] = !is_art[c];
  if (run_phase(t, cost, allowed, sol.pivots) == PhaseResult::Unbounded) {
    sol.status = LPStatus::Unbounded;
    return sol;
  }

  std::vector<Rat> z(ncols, Rat(0));
  for (std::size_t r = 0; r < m; ++r) z[t.basis[r]] = t.rhs(r);
  sol.primal.assign(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    sol.primal[j] = z[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) sol.primal[j] -= z[neg_col[j]];
  }
  sol.optimum = 0;
  for (std::size_t j = 0; j < n; ++j) sol.optimum += lp.objective[j] * sol.primal[j];

  // Initial basic columns form the identity, so their tableau columns hold
  // B^{-1}; with zero cost, d = -c_B B^{-1} on those columns.
  auto d = t.reduced_costs(cost);
  sol.dual.assign(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    Rat y = -d[initial_basic[i]];
    y *= row_sign[i];
    sol.dual[i] = maximize ? y : Rat(-y);
  }
  sol.status = LPStatus::Optimal;

  if (auto err = check_certificate(lp, sol); !err.empty())
    throw std::logic_error("simplex certificate re-check failed: " + err);
  return sol;
}

std::string check_certificate(const ExactLP& lp, const ExactLPSolution& sol) {
  if (sol.status != LPStatus::Optimal) return "solution is not OPTIMAL";
  const std::size_t n = lp.num_vars(), m = lp.num_rows();
  if (sol.primal.size() != n || sol.dual.size() != m) return "certificate dimensions";
  const bool maximize = lp.direction == Direction::Maximize;
  auto is_free = [&](std::size_t j) { return !lp.free_variable.empty() && lp.free_variable[j]; };
  std::ostringstream err;

  for (std::size_t j = 0; j < n; ++j) {
    if (!is_free(j) && sol.primal[j] < 0) {
      err << "primal x[" << j << "] < 0";
      return err.str();
    }
  }
  Rat obj = 0, dual_obj = 0;
  for (std::size_t j = 0; j < n; ++j) obj += lp.objective[j] * sol.primal[j];
  for (std::size_t i = 0; i < m; ++i) {
    Rat lhs = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (lp.rows[i][j] != 0) lhs += lp.rows[i][j] * sol.primal[j];
    const Rat slack = lp.rhs[i] - lhs;
    const Sense s = lp.senses[i];
    if ((s == Sense::LessEq && slack < 0) || (s == Sense::GreaterEq && slack > 0) ||
        (s == Sense::Equal && slack != 0)) {
      err << "primal row " << i << " violated";
      return err.str();
    }
    // Shadow-price sign: a max problem gains from relaxing <= rows.
    const Rat& y = sol.dual[i];
    const bool le_sign_ok = maximize ? y >= 0 : y <= 0;
    const bool ge_sign_ok = maximize ? y <= 0 : y >= 0;
    if ((s == Sense::LessEq && !le_sign_ok) || (s == Sense::GreaterEq && !ge_sign_ok)) {
      err << "dual y[" << i << "] has wrong sign";
      return err.str();
    }
    if (y * slack != 0) {
      err << "complementary slackness fails on row " << i;
      return err.str();
    }
    dual_obj += lp.rhs[i] * y;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rat reduced = lp.objective[j];
    for (std::size_t i = 0; i < m; ++i)
      if (lp.rows[i][j] != 0) reduced -= sol.dual[i] * lp.rows[i][j];
    const bool ok = is_free(j) ? reduced == 0 : (maximize ? reduced <= 0 : reduced >= 0);
    if (!ok) {
      err << "dual constraint for variable " << j << " violated";
      return err.str();
    }
    if (reduced * sol.primal[j] != 0) {
      err << "complementary slackness fails on variable " << j;
      return err.str();
    }
  }
  if (obj != sol.optimum) return "reported optimum differs from c.x";
  if (obj != dual_obj) return "strong duality fails (c.x != b.y)";
  return {};
}

}  // namespace hmaps
