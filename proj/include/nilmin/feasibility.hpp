// Exact decision of "U x = lambda [1] has a strictly positive solution",
// with a rational witness or an infeasibility description.
//
// Since U is positive semidefinite, lambda < 0 is impossible with x > 0, so
// only lambda = 1 and lambda = 0 are tested (scaling x normalizes lambda).
// Strict positivity is decided exactly by maximizing the minimum coordinate
// with a two-phase rational simplex (Bland's rule).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilmin/rational.hpp"
#include "nilmin/weights.hpp"

namespace nilmin {

struct AffineForm {
  // Solution set of U x = [1]:  x = constant + sum_f param_f * direction_f.
  std::vector<Rat> constant;
  std::vector<int> free_cols;  // 0-based coordinates acting as parameters
  std::vector<std::vector<Rat>> directions;  // one per free column

  // e.g. "(0, 1/3-a-b-c, a, b, c)"
  std::string render() const;
};

enum class FeasStatus {
  FeasibleLambdaPositive,
  FeasibleLambdaZero,
  Infeasible,
};

const char* feas_status_name(FeasStatus s);

struct FeasibilityResult {
  FeasStatus status = FeasStatus::Infeasible;
  Rat lambda;                // 1 or 0 when feasible
  std::vector<Rat> witness;  // strictly positive, U w = lambda [1] exactly
  std::optional<AffineForm> solution_form;  // when U x = [1] is consistent
  std::optional<std::vector<Rat>> farkas;   // y^T U = 0, y^T [1] = 1
};

FeasibilityResult solve_positive(const GramMatrix& u);

// Exact positive-semidefiniteness via symmetric Gaussian elimination.
bool gram_psd(const GramMatrix& u);

}  // namespace nilmin
