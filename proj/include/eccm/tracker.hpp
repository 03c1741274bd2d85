// Fast-timescale target simulation and Kalman tracker. The slow-timescale
// action pair only enters through the measurement-noise variance.
#pragma once

#include "eccm/action.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace eccm {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix<double, 3, 3>;
using Vec3 = Eigen::Matrix<double, 3, 1>;
using Mat36 = Eigen::Matrix<double, 3, 6>;

// Constant-velocity kinematics per axis; state is (position, velocity) for
// x, y, z stacked. A is block-diagonal in [[1, T], [0, 1]] blocks.
struct KinematicsModel {
  double sample_period = 1.0;  // T
  Mat6 process_noise = Mat6::Identity() * 0.01;
  Vec6 x0_mean = Vec6::Zero();
  Mat6 x0_cov = Mat6::Identity();

  Mat6 transition() const;
  static Mat36 measurement_matrix();  // selects the three positions

  // Throws std::invalid_argument unless the covariances are symmetric PSD.
  void validate() const;
};

// Measurement-noise variance sigma^2 I3 with
// sigma^2 = sigma0_sq (1 + c_j beta'beta) / (eps + c_r ||alpha||^2):
// increasing in the jammer power, decreasing in the radar power.
struct NoiseModel {
  double sigma0_sq = 1.0;
  double c_r = 1.0;
  double c_j = 4.0;
  double eps = 1e-3;
};

Mat3 noise_variance(const NoiseModel& nm, const ActionVector& alpha,
                    const ActionVector& beta);

struct TrackerState {
  Vec6 mean = Vec6::Zero();
  Mat6 cov = Mat6::Zero();
};

// Predict with (A, Q), update with (C, V); Joseph-form covariance update.
TrackerState kalman_step(const KinematicsModel& km, const TrackerState& tracker,
                         const Vec3& measurement, const Mat3& V);

struct FastScaleResult {
  double rmse = 0.0;             // position RMSE over the window
  double final_cov_trace = 0.0;  // trace of the last posterior covariance

  bool operator==(const FastScaleResult&) const = default;
};

// Samples a trajectory from the kinematics model, runs the tracker on the
// noisy position measurements, and reports tracking quality. Deterministic
// per seed.
FastScaleResult simulate_fast_timescale(const KinematicsModel& km, const NoiseModel& nm,
                                        const ActionVector& alpha, const ActionVector& beta,
                                        int n_steps, std::uint64_t seed);

}  // namespace eccm
