#pragma once

// Asymptotic rate functions (bits) and the (alpha, beta) region curves for
// maps F_2^k -> F_2^n with rho = n/k.

#include <optional>
#include <vector>

namespace hmaps {

/// Binary entropy, log base 2; h(0) = h(1) = 0.
double h(double x);

/// h(1/2 - sqrt(d(1-d))) for d < 1/2, else 0.
double r_lp1(double delta);

/// min 1 - h(a) + h(b) over 0 <= b <= a <= 1/2 with
/// 2(a(1-a) - b(1-b)) / (1 + 2 sqrt(b(1-b))) <= delta; 0 for delta >= 1/2.
double r_lp2(double delta);

/// (1/2) max(1 - h(a) + R_LP1(a), h(1 - 2 sqrt(a(1-a)))) for a < 1/2, else 0.
double r_sam(double alpha);

struct BoundCurveRow {
  double beta = 0;
  // lower bounds on alpha
  std::optional<double> lb_ccb;     // 1 - h(a) <= rho R_LP2(beta)
  std::optional<double> lb_ccsam;   // R_Sam(a) <= rho R_LP2(beta)
  std::optional<double> lb_it;      // 1 - h(a/2) <= rho (1 - h(beta/2))
  std::optional<double> lb_tm3;     // a >= beta, beta > 1/2
  // achievable alpha
  std::optional<double> ach_repetition;  // rho integer
  std::optional<double> ach_majority;    // 1/rho odd integer
  std::optional<double> ach_separation;  // beta <= 1/2

  /// Max of the present lower bounds.
  double lower_bound() const;
  /// Min of the present achievable values, if any.
  std::optional<double> best_achievable() const;
};

/// One row per grid point; rho > 0 and every beta in (0,1).
std::vector<BoundCurveRow> region(double rho, const std::vector<double>& betas);

/// lo, lo+step, ... up to hi (inclusive within half a step).
std::vector<double> grid(double lo, double hi, double step);

}  // namespace hmaps
