#pragma once

// Dense two-phase primal simplex over exact rationals, Bland's rule.

#include "hmaps/exact.hpp"

#include <vector>

namespace hmaps {

enum class Sense { LessEq, Equal, GreaterEq };
enum class Direction { Maximize, Minimize };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct ExactLP {
  Direction direction = Direction::Maximize;
  std::vector<Rat> objective;             // one entry per variable
  std::vector<std::vector<Rat>> rows;     // constraint matrix, rows.size() == rhs.size()
  std::vector<Sense> senses;
  std::vector<Rat> rhs;
  std::vector<bool> free_variable;        // empty means all variables >= 0

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }

  /// Appends a constraint row.
  void add_row(std::vector<Rat> coeffs, Sense sense, Rat b);
  /// Throws DomainError on inconsistent dimensions.
  void validate() const;
};

struct ExactLPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rat optimum;
  std::vector<Rat> primal;
  /// Shadow prices y_i = d(optimum)/d(rhs_i). At optimality rhs . y == optimum.
  std::vector<Rat> dual;
  std::size_t pivots = 0;
};

/// Solves the LP exactly. On OPTIMAL the primal and dual vectors are re-checked
/// against the original data (feasibility, strong duality, complementary
/// slackness); a failed re-check throws std::logic_error.
ExactLPSolution solve(const ExactLP& lp);

/// Re-verifies an OPTIMAL solution against the LP data. Returns an empty
/// string on success, otherwise a description of the first violated condition.
std::string check_certificate(const ExactLP& lp, const ExactLPSolution& sol);

}  // namespace hmaps
