#include "eccm/afriat.hpp"

#include <algorithm>
#include <cmath>

namespace eccm {

namespace {

// Largest |L_r| over the box, plus one; bounds the auxiliary LP variable.
double level_bound(const AfriatInequalitySystem& sys) {
  double bound = 1.0;
  for (const AfriatRow& row : sys.rows) {
    double hi = row.offset, lo = row.offset;
    for (double cij : row.coeff) {
      hi += std::max(cij * sys.box.lo, cij * sys.box.hi);
      lo += std::min(cij * sys.box.lo, cij * sys.box.hi);
    }
    bound = std::max(bound, std::max(std::abs(hi), std::abs(lo)) + 1.0);
  }
  return bound;
}

// Appends the box rows for theta and the +-bound rows for the auxiliary
// variable (the last coordinate).
void append_bound_rows(std::vector<Vec>& rows, Vec& rhs, std::size_t d,
                       const ThetaBox& box, double aux_bound) {
  for (std::size_t i = 0; i < d; ++i) {
    Vec up(d + 1, 0.0), down(d + 1, 0.0);
    up[i] = 1.0;
    down[i] = -1.0;
    rows.push_back(up);
    rhs.push_back(box.hi);
    rows.push_back(down);
    rhs.push_back(-box.lo);
  }
  Vec up(d + 1, 0.0), down(d + 1, 0.0);
  up[d] = 1.0;
  down[d] = -1.0;
  rows.push_back(up);
  rhs.push_back(aux_bound);
  rows.push_back(down);
  rhs.push_back(aux_bound);
}

Vec clamp_to_box(Vec theta, const ThetaBox& box) {
  for (double& t : theta) t = box.clamp(t);
  return theta;
}

}  // namespace

AfriatInequalitySystem build_system(const InteractionDataset& data, double lambda,
                                    const ThetaBox& box) {
  if (data.empty()) throw std::invalid_argument("build_system: empty dataset");
  if (!(lambda >= 0.0)) throw std::invalid_argument("build_system: lambda must be >= 0");

  const auto& recs = data.records();
  const std::size_t k = recs.size();
  const std::size_t d = data.dim();
  AfriatInequalitySystem sys;
  sys.box = box;
  sys.dim = d;
  sys.lambda = lambda;
  sys.rows.reserve(k * (k - 1));
  for (std::size_t s = 0; s < k; ++s) {
    const Vec& beta_s = recs[s].response.entries();
    for (std::size_t t = 0; t < k; ++t) {
      if (s == t) continue;
      const Vec& beta_t = recs[t].response.entries();
      const Vec& alpha_t = recs[t].probe.entries();
      AfriatRow row;
      row.s = s + 1;
      row.t = t + 1;
      row.coeff.resize(d);
      row.offset = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        row.coeff[i] = -(beta_s[i] * beta_s[i] - beta_t[i] * beta_t[i]);
        row.offset += lambda * alpha_t[i] * (beta_s[i] - beta_t[i]);
      }
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

bool membership(const AfriatInequalitySystem& sys, const Vec& theta, double tol_feas) {
  if (theta.size() != sys.dim) return false;
  if (!sys.box.contains(theta)) return false;
  for (const AfriatRow& row : sys.rows)
    if (row.value(theta) > tol_feas) return false;
  return true;
}

double margin_of(const AfriatInequalitySystem& sys, const Vec& theta) {
  if (sys.rows.empty()) return 0.0;
  double m = sys.rows.front().value(theta);
  for (std::size_t r = 1; r < sys.rows.size(); ++r)
    m = std::min(m, sys.rows[r].value(theta));
  return m;
}

double worst_violation_of(const AfriatInequalitySystem& sys, const Vec& theta) {
  double w = 0.0;
  bool first = true;
  for (const AfriatRow& row : sys.rows) {
    const double v = row.value(theta);
    w = first ? v : std::max(w, v);
    first = false;
  }
  return sys.rows.empty() ? 0.0 : w;
}

FeasibilityResult feasibility_test(const AfriatInequalitySystem& sys, double tol_feas) {
  if (sys.rows.empty()) return {true, sys.box.midpoint(sys.dim), 0.0};

  // Variables x = (theta, v): min v s.t. coeff'theta - v <= -offset.
  const std::size_t d = sys.dim;
  std::vector<Vec> rows;
  Vec rhs;
  rows.reserve(sys.rows.size() + 2 * d + 2);
  for (const AfriatRow& row : sys.rows) {
    Vec r(d + 1, 0.0);
    for (std::size_t i = 0; i < d; ++i) r[i] = row.coeff[i];
    r[d] = -1.0;
    rows.push_back(std::move(r));
    rhs.push_back(-row.offset);
  }
  append_bound_rows(rows, rhs, d, sys.box, level_bound(sys));
  Vec cost(d + 1, 0.0);
  cost[d] = 1.0;

  const LpResult lp = solve_inequality_lp(rows, rhs, cost);
  if (lp.status != LpStatus::kOptimal)
    throw SolverError("feasibility_test: bounded LP did not solve");
  if (lp.value > tol_feas) return {false, std::nullopt, lp.value};
  Vec witness = clamp_to_box(Vec(lp.x.begin(), lp.x.begin() + d), sys.box);
  return {true, std::move(witness), lp.value};
}

MarginResult max_margin_estimate(const AfriatInequalitySystem& sys, const Vec& fallback,
                                 double tol_feas) {
  if (fallback.size() != sys.dim)
    throw std::invalid_argument("max_margin_estimate: fallback dimension mismatch");
  if (sys.rows.empty()) return {true, fallback, 0.0, 0.0};

  const FeasibilityResult feas = feasibility_test(sys, tol_feas);
  if (!feas.feasible) return {false, fallback, 0.0, worst_violation_of(sys, fallback)};

  // Variables x = (theta, m): max m s.t. m <= L_r(theta) <= tol_ub. The upper
  // bound is tightened to half the tolerance so the recovered vertex stays a
  // member of the feasible set after floating-point round-off.
  const std::size_t d = sys.dim;
  const double tol_ub = 0.5 * tol_feas;
  std::vector<Vec> rows;
  Vec rhs;
  rows.reserve(2 * sys.rows.size() + 2 * d + 2);
  for (const AfriatRow& row : sys.rows) {
    Vec lower(d + 1, 0.0);  // m - coeff'theta <= offset
    Vec upper(d + 1, 0.0);  // coeff'theta <= tol_ub - offset
    for (std::size_t i = 0; i < d; ++i) {
      lower[i] = -row.coeff[i];
      upper[i] = row.coeff[i];
    }
    lower[d] = 1.0;
    rows.push_back(std::move(lower));
    rhs.push_back(row.offset);
    rows.push_back(std::move(upper));
    rhs.push_back(tol_ub - row.offset);
  }
  append_bound_rows(rows, rhs, d, sys.box, level_bound(sys));
  Vec cost(d + 1, 0.0);
  cost[d] = -1.0;

  const LpResult lp = solve_inequality_lp(rows, rhs, cost);
  if (lp.status != LpStatus::kOptimal)
    throw SolverError("max_margin_estimate: margin LP did not solve");
  Vec theta_hat = clamp_to_box(Vec(lp.x.begin(), lp.x.begin() + d), sys.box);
  const double margin = margin_of(sys, theta_hat);
  return {true, std::move(theta_hat), margin, worst_violation_of(sys, theta_hat)};
}

MarginResult min_slack_estimate(const AfriatInequalitySystem& sys, const Vec& fallback,
                                double tol_feas) {
  if (fallback.size() != sys.dim)
    throw std::invalid_argument("min_slack_estimate: fallback dimension mismatch");
  if (sys.rows.empty()) return {true, fallback, 0.0, 0.0};

  const FeasibilityResult feas = feasibility_test(sys, tol_feas);
  if (!feas.feasible) return {false, fallback, 0.0, worst_violation_of(sys, fallback)};
  const Vec& theta_hat = *feas.witness;
  return {true, theta_hat, margin_of(sys, theta_hat), worst_violation_of(sys, theta_hat)};
}

}  // namespace eccm
