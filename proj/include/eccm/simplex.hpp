// Dense exact LP machinery for the revealed-preference estimators. The
// systems here have few variables and many inequality rows, so the solver
// works on the standard-form dual and recovers the primal point from the
// optimal basis multipliers.
#pragma once

#include "eccm/action.hpp"

#include <stdexcept>

namespace eccm {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Vec x;               // meaningful only when status == kOptimal
  double value = 0.0;  // c'x at the optimum
  long iterations = 0;
};

// min c'x subject to rows[r]'x <= b[r] for all r, x free. Two-phase simplex
// with Bland's anti-cycling rule; throws SolverError when the iteration cap
// is hit or the recovered solution fails validation.
LpResult solve_inequality_lp(const std::vector<Vec>& rows, const Vec& b, const Vec& c,
                             long iter_cap = 100000);

}  // namespace eccm
