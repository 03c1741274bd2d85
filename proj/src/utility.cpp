#include "eccm/utility.hpp"

#include <cmath>

namespace eccm {

void validate_jammer_params(const JammerParams& p, const ThetaBox& box) {
  if (!all_finite(p.theta) || !std::isfinite(p.lambda))
    throw std::invalid_argument("JammerParams: non-finite value");
  if (p.lambda < 0.0) throw std::invalid_argument("JammerParams: lambda must be >= 0");
  if (!box.contains(p.theta))
    throw std::invalid_argument("JammerParams: theta outside the parameter box");
}

void validate_radar_weights(const RadarWeights& w) {
  if (!std::isfinite(w.delta) || w.delta < 0.0)
    throw std::invalid_argument("RadarWeights: delta must be >= 0");
  if (!std::isfinite(w.eps_sinr) || w.eps_sinr <= 0.0)
    throw std::invalid_argument("RadarWeights: eps_sinr must be > 0");
}

double jammer_utility(const JammerParams& p, const ActionVector& alpha,
                      const ActionVector& beta) {
  const Vec& a = alpha.entries();
  const Vec& b = beta.entries();
  if (p.theta.size() != b.size() || a.size() != b.size())
    throw std::invalid_argument("jammer_utility: dimension mismatch");
  double quad = 0.0;
  double coupling = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    quad += p.theta[i] * b[i] * b[i];
    coupling += a[i] * b[i];
  }
  return -quad + p.lambda * coupling;
}

double radar_utility(const RadarWeights& w, const JammerParams& p_hat,
                     const ActionVector& alpha, const ActionVector& beta) {
  const Vec& a = alpha.entries();
  const Vec& b = beta.entries();
  if (p_hat.theta.size() != b.size() || a.size() != b.size())
    throw std::invalid_argument("radar_utility: dimension mismatch");
  double num = 0.0;
  double bb = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    num += b[i] * a[i] * a[i];
    bb += b[i] * b[i];
  }
  const double sinr = num / (num + bb + w.eps_sinr);
  return sinr - w.delta * jammer_utility(p_hat, alpha, beta);
}

}  // namespace eccm
