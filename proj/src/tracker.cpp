#include "eccm/tracker.hpp"

#include "eccm/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace eccm {

namespace {

void require_symmetric_psd(const Mat6& m, const char* name) {
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument(std::string(name) + ": not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat6> es(m);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument(std::string(name) + ": not positive semidefinite");
}

// Symmetric PSD square root via the spectral decomposition; exact for the
// singular covariances used in the noiseless tests.
Mat6 psd_sqrt(const Mat6& m) {
  Eigen::SelfAdjointEigenSolver<Mat6> es(m);
  Vec6 lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

Mat6 KinematicsModel::transition() const {
  Mat6 a = Mat6::Identity();
  for (int axis = 0; axis < 3; ++axis) a(2 * axis, 2 * axis + 1) = sample_period;
  return a;
}

Mat36 KinematicsModel::measurement_matrix() {
  Mat36 c = Mat36::Zero();
  for (int axis = 0; axis < 3; ++axis) c(axis, 2 * axis) = 1.0;
  return c;
}

void KinematicsModel::validate() const {
  if (!(sample_period > 0.0))
    throw std::invalid_argument("KinematicsModel: sample_period must be > 0");
  require_symmetric_psd(process_noise, "KinematicsModel process noise");
  require_symmetric_psd(x0_cov, "KinematicsModel initial covariance");
}

Mat3 noise_variance(const NoiseModel& nm, const ActionVector& alpha,
                    const ActionVector& beta) {
  const double aa = dot(alpha.entries(), alpha.entries());
  const double bb = dot(beta.entries(), beta.entries());
  const double sigma_sq = nm.sigma0_sq * (1.0 + nm.c_j * bb) / (nm.eps + nm.c_r * aa);
  return Mat3::Identity() * sigma_sq;
}

TrackerState kalman_step(const KinematicsModel& km, const TrackerState& tracker,
                         const Vec3& measurement, const Mat3& V) {
  const Mat6 a = km.transition();
  const Mat36 c = KinematicsModel::measurement_matrix();

  const Vec6 mean_pred = a * tracker.mean;
  const Mat6 cov_pred = a * tracker.cov * a.transpose() + km.process_noise;

  const Mat3 s = c * cov_pred * c.transpose() + V;
  Eigen::LLT<Mat3> llt(s);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("kalman_step: singular innovation covariance");
  const Eigen::Matrix<double, 6, 3> gain =
      cov_pred * c.transpose() * llt.solve(Mat3::Identity());

  TrackerState out;
  out.mean = mean_pred + gain * (measurement - c * mean_pred);
  const Mat6 ikc = Mat6::Identity() - gain * c;
  Mat6 cov = ikc * cov_pred * ikc.transpose() + gain * V * gain.transpose();
  out.cov = 0.5 * (cov + cov.transpose());
  return out;
}

FastScaleResult simulate_fast_timescale(const KinematicsModel& km, const NoiseModel& nm,
                                        const ActionVector& alpha, const ActionVector& beta,
                                        int n_steps, std::uint64_t seed) {
  if (n_steps < 1)
    throw std::invalid_argument("simulate_fast_timescale: n_steps must be >= 1");
  km.validate();

  const Mat6 a = km.transition();
  const Mat36 c = KinematicsModel::measurement_matrix();
  const Mat6 sqrt_q = psd_sqrt(km.process_noise);
  const Mat6 sqrt_p0 = psd_sqrt(km.x0_cov);
  const Mat3 v = noise_variance(nm, alpha, beta);
  const double sigma = std::sqrt(v(0, 0));

  Rng rng(seed);
  const auto gauss6 = [&rng] {
    Vec6 z;
    for (int i = 0; i < 6; ++i) z(i) = rng.gaussian();
    return z;
  };

  Vec6 x = km.x0_mean + sqrt_p0 * gauss6();
  TrackerState tracker{km.x0_mean, km.x0_cov};

  double sse = 0.0;
  for (int n = 0; n < n_steps; ++n) {
    x = a * x + sqrt_q * gauss6();
    Vec3 y = c * x;
    for (int i = 0; i < 3; ++i) y(i) += sigma * rng.gaussian();
    tracker = kalman_step(km, tracker, y, v);
    sse += (c * x - c * tracker.mean).squaredNorm();
  }
  return {std::sqrt(sse / n_steps), tracker.cov.trace()};
}

}  // namespace eccm
