#include "eccm/jammer.hpp"

#include <algorithm>
#include <cmath>

namespace eccm {

namespace {

constexpr double kBisectTol = 1e-10;  // on ||beta(mu)||^2 - 1
constexpr int kBisectCap = 200;

Vec kkt_candidate(const Vec& theta, const Vec& alpha, double lambda, double mu) {
  Vec beta(theta.size(), 0.0);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double num = lambda * alpha[i];
    if (num > 0.0) beta[i] = num / (2.0 * (theta[i] + mu));
  }
  return beta;
}

double sq_norm(const Vec& v) { return dot(v, v); }

}  // namespace

BestResponseReport best_response(const JammerParams& p, const ActionVector& alpha) {
  const Vec& a = alpha.entries();
  const Vec& theta = p.theta;
  if (theta.size() != a.size())
    throw std::invalid_argument("best_response: dimension mismatch");
  if (!all_finite(theta) || !std::isfinite(p.lambda))
    throw std::invalid_argument("best_response: non-finite input");
  if (p.lambda < 0.0) throw std::invalid_argument("best_response: lambda must be >= 0");
  for (double t : theta)
    if (t < 0.0)
      throw std::invalid_argument("best_response: negative theta (utility not concave)");

  const double lambda = p.lambda;
  const double alpha_norm = norm2(a);
  if (lambda == 0.0 || alpha_norm == 0.0) {
    return {project_feasible(Vec(theta.size(), 0.0)), 0.0, 0.0};
  }

  // mu = 0 candidate is valid only when no coordinate is linear (theta_i = 0
  // with alpha_i > 0 forces the ball constraint to bind).
  bool needs_ball = false;
  for (std::size_t i = 0; i < theta.size(); ++i)
    if (a[i] > 0.0 && theta[i] <= 0.0) needs_ball = true;

  double mu = 0.0;
  Vec beta;
  if (!needs_ball) {
    beta = kkt_candidate(theta, a, lambda, 0.0);
    if (sq_norm(beta) > 1.0) needs_ball = true;
  }
  if (needs_ball) {
    // g(mu) = ||beta(mu)||^2 - 1 is strictly decreasing; g(mu_max) <= 0.
    const double mu_max = 0.5 * lambda * alpha_norm;
    double lo = 0.0, hi = mu_max;
    mu = hi;
    beta = kkt_candidate(theta, a, lambda, mu);
    if (std::abs(sq_norm(beta) - 1.0) > kBisectTol) {
      for (int it = 0; it < kBisectCap; ++it) {
        const double mid = 0.5 * (lo + hi);
        Vec cand = kkt_candidate(theta, a, lambda, mid);
        const double g = sq_norm(cand) - 1.0;
        if (std::abs(g) <= kBisectTol) {
          mu = mid;
          beta = std::move(cand);
          break;
        }
        if (g > 0.0) {
          lo = mid;
        } else {
          hi = mid;
          mu = mid;
          beta = std::move(cand);
        }
      }
    }
  }

  ActionVector beta_star = project_feasible(beta);
  const Vec& b = beta_star.entries();

  double resid = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double stat = lambda * a[i] - 2.0 * (theta[i] + mu) * b[i];
    resid = std::max(resid, b[i] > 0.0 ? std::abs(stat) : std::max(0.0, stat));
  }
  resid = std::max(resid, mu * std::abs(sq_norm(b) - 1.0));
  return {std::move(beta_star), mu, resid};
}

ActionVector best_response_oracle(const JammerParams& p, const ActionVector& alpha,
                                  double step, std::size_t cell_budget) {
  const Vec& a = alpha.entries();
  const Vec& theta = p.theta;
  const std::size_t d = theta.size();
  if (a.size() != d) throw std::invalid_argument("best_response_oracle: dimension mismatch");
  if (!(step > 0.0 && step <= 0.5))
    throw std::invalid_argument("best_response_oracle: step must lie in (0, 0.5]");

  const int m = static_cast<int>(std::floor(1.0 / step + 1e-9));
  double cells = 1.0;
  for (std::size_t i = 0; i < d; ++i) cells *= static_cast<double>(m + 1);
  if (cells > static_cast<double>(cell_budget))
    throw std::runtime_error("best_response_oracle: grid cell budget exceeded");

  Vec best(d, 0.0);
  double best_val = 0.0;  // value at the origin
  std::vector<int> idx(d, 0);
  Vec point(d, 0.0);
  while (true) {
    double sumsq = 0.0;
    double val = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      point[i] = idx[i] * step;
      sumsq += point[i] * point[i];
      val += -theta[i] * point[i] * point[i] + p.lambda * a[i] * point[i];
    }
    if (sumsq <= 1.0 + kFeasibilityTol && val > best_val) {
      best_val = val;
      best = point;
    }
    // odometer increment
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++idx[pos] <= m) break;
      idx[pos] = 0;
      if (pos == 0) return project_feasible(best);
    }
  }
}

}  // namespace eccm
