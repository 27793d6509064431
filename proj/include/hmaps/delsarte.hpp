#pragma once

// theta_S of Hamming graphs through the Krawtchouk-basis linear program,
// plus the two closed-form certificates (Plotkin dual, Levenshtein primal).
//
// Primal: maximise fhat(0) over f with f(0) = 1, f = 0 on edge distances,
//         f >= 0, fhat >= 0.
// Dual:   ghat >= 0, ghat(0) = 1, g <= 0 on non-edge distances x >= 1;
//         bound 2^n g(0).

#include "hmaps/exact.hpp"
#include "hmaps/graphs.hpp"

#include <string>

namespace hmaps {

struct ThetaResult {
  HammingGraphSpec graph;
  Rat value;
  SpectrumPoly primal;  // fhat, f(0) = 1
  SpectrumPoly dual;    // ghat, ghat(0) = 1
};

ThetaResult theta_s(const HammingGraphSpec& g);
ThetaResult theta_s_hamming(int n, int d);

/// Empty string when fhat is primal feasible for g, otherwise the first violation.
std::string check_primal(const HammingGraphSpec& g, const SpectrumPoly& fhat);
/// Empty string when ghat is dual feasible for g (ghat(0) > 0 required).
std::string check_dual(const HammingGraphSpec& g, const SpectrumPoly& ghat);
/// 2^n g(0) / ghat(0).
Rat dual_bound(const SpectrumPoly& ghat);
/// Re-checks both certificates and value equality from raw tables.
std::string check_theta(const ThetaResult& r);

struct PlotkinDual {
  SpectrumPoly ghat;  // (2^n(2d+2-n), 2^n, 0, ..., 0)
  Rat bound;          // 2(d+1)/(2d+2-n)
};
/// Needs 2d+2 > n.
PlotkinDual plotkin_dual(int n, int d);

struct LevenshteinPrimal {
  bool feasible = false;
  SpectrumPoly fhat;  // 1 + r K_{d+1}(w) / C(n,d+1)
  Rat r;
  Rat bound;          // 1 + r = (2d+2)/(2d+2-n)
};
/// Needs d odd, d < n, 2d+2 > n.
LevenshteinPrimal levenshtein_primal(int n, int d);

}  // namespace hmaps
