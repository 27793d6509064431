#include "hmaps/asym.hpp"

#include "hmaps/exact.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace hmaps {

namespace {

constexpr double kTol = 1e-14;

// 1/2 - sqrt(x(1-x)) without cancellation near x = 1/2.
double half_minus_sqrt(double x) {
  const double s = std::sqrt(x * (1 - x));
  return (0.5 - x) * (0.5 - x) / (0.5 + s);
}

// Smallest x in [lo, hi] with pred(x), pred monotone false -> true.
double smallest_true(double lo, double hi, const std::function<bool(double)>& pred) {
  if (pred(lo)) return lo;
  for (int it = 0; it < 200 && hi - lo > kTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

// 1 - h(x) via x = (1-u)/2: ((1+u) log(1+u) + (1-u) log(1-u)) / (2 ln 2).
double one_minus_h(double x) {
  if (x <= 0 || x >= 1) return 1;
  const double u = 1 - 2 * x;
  return ((1 + u) * std::log1p(u) + (1 - u) * std::log1p(-u)) / (2 * std::log(2.0));
}

double lp2_constraint(double a, double b) {
  // a(1-a) - b(1-b) = (a-b)(1-a-b)
  return 2 * (a - b) * (1 - a - b) / (1 + 2 * std::sqrt(b * (1 - b)));
}

double lp2_phi(double a, double delta) {
  if (a >= 0.5) return r_lp1(delta);
  const double b = smallest_true(0, a, [&](double b) { return lp2_constraint(a, b) <= delta; });
  return one_minus_h(a) + h(b);
}

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

}  // namespace

double h(double x) {
  if (x <= 0 || x >= 1) return 0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

double r_lp1(double delta) {
  if (delta >= 0.5) return 0;
  if (delta <= 0) return 1;
  return h(half_minus_sqrt(delta));
}

double r_lp2(double delta) {
  if (delta >= 0.5) return 0;
  if (delta <= 0) return 1;
  double best_a = 0.5, best = lp2_phi(0.5, delta);
  for (int i = 0; i < 500; ++i) {
    const double a = i * 1e-3;
    const double v = lp2_phi(a, delta);
    if (v < best) {
      best = v;
      best_a = a;
    }
  }
  // Golden-section refinement around the best grid point.
  double lo = std::max(0.0, best_a - 1e-3), hi = std::min(0.5, best_a + 1e-3);
  const double g = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = lp2_phi(x1, delta), f2 = lp2_phi(x2, delta);
  while (hi - lo > 1e-12) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = lp2_phi(x1, delta);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = lp2_phi(x2, delta);
    }
  }
  return std::min({best, f1, f2});
}

double r_sam(double alpha) {
  if (alpha >= 0.5) return 0;
  const double first = one_minus_h(alpha) + r_lp1(alpha);
  // 1 - 2 sqrt(a(1-a)) = 2 (1/2 - sqrt(a(1-a)))
  const double second = h(2 * half_minus_sqrt(alpha));
  return 0.5 * std::max(first, second);
}

double BoundCurveRow::lower_bound() const {
  double lb = 0;
  for (const auto& v : {lb_ccb, lb_ccsam, lb_it, lb_tm3})
    if (v) lb = std::max(lb, *v);
  return lb;
}

std::optional<double> BoundCurveRow::best_achievable() const {
  std::optional<double> out;
  for (const auto& v : {ach_repetition, ach_majority, ach_separation})
    if (v && (!out || *v < *out)) out = v;
  return out;
}

std::vector<BoundCurveRow> region(double rho, const std::vector<double>& betas) {
  if (!(rho > 0) || !std::isfinite(rho)) throw DomainError("rho must be positive");
  for (double b : betas)
    if (!(b > 0 && b < 1)) throw DomainError("beta grid must lie in (0,1)");
  const bool rep = rho >= 1 && near_integer(rho);
  const bool maj = rho <= 1 && near_integer(1 / rho) && static_cast<long>(std::round(1 / rho)) % 2 == 1;

  std::vector<BoundCurveRow> rows(betas.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(betas.size()); ++i) {
    const double beta = betas[static_cast<std::size_t>(i)];
    BoundCurveRow r;
    r.beta = beta;
    const double lp2 = rho * r_lp2(beta);
    r.lb_ccb = smallest_true(0, 0.5, [&](double a) { return one_minus_h(a) <= lp2; });
    r.lb_ccsam = smallest_true(0, 0.5, [&](double a) { return r_sam(a) <= lp2; });
    const double it_rhs = rho * one_minus_h(beta / 2);
    r.lb_it = smallest_true(0, 1, [&](double a) { return one_minus_h(a / 2) <= it_rhs; });
    if (beta > 0.5) r.lb_tm3 = beta;
    if (rep) r.ach_repetition = beta;
    if (maj) r.ach_majority = rho * beta + 1 - rho;
    if (beta <= 0.5) {
      const double sep_rhs = rho * one_minus_h(beta);
      r.ach_separation = smallest_true(0, 1, [&](double a) { return one_minus_h(a / 2) <= sep_rhs; });
    }
    rows[static_cast<std::size_t>(i)] = r;
  }
  return rows;
}

std::vector<double> grid(double lo, double hi, double step) {
  if (!(step > 0)) throw DomainError("grid step must be positive");
  std::vector<double> out;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 0.5));
  for (long i = 0; i <= count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

}  // namespace hmaps
