// Copyright 2026 The vtr-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VTRLAB_REGRESSION_H_
#define VTRLAB_REGRESSION_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vtrlab/mdp.h"

namespace vtrlab {

// Predicted-value feature X with X_j = sum_s' V(s') P_j(s'|s,a), stored
// sparsely. Components are unique and sorted; exact zeros are omitted.
struct FeatureVector {
  int dim = 0;
  std::vector<int> index;
  std::vector<double> value;

  bool empty() const { return index.empty(); }
  double Dot(std::span<const double> dense) const;
  Eigen::VectorXd Dense() const;
};

FeatureVector Features(const LinearMixtureMdp& mixture,
                       std::span<const double> next_values, int s, int a);

// Online ridge regression of value targets onto predicted-value features.
//
// Holds the Gram matrix M = lambda I + sum x x^T, its inverse maintained by
// Sherman-Morrison rank-one updates, the target-weighted sum w = sum y x and
// log det M maintained through the matrix-determinant lemma. Every
// kRebaselineInterval updates the inverse is recomputed directly and
// replaced when it has drifted by more than kDriftTolerance.
class RegressionState {
 public:
  static constexpr std::int64_t kRebaselineInterval = 10000;
  static constexpr double kDriftTolerance = 1e-8;

  RegressionState(int dim, double lambda);

  int dim() const { return dim_; }
  double lambda() const { return lambda_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  const Eigen::MatrixXd& gram_inv() const { return gram_inv_; }
  const Eigen::VectorXd& target_sum() const { return target_sum_; }
  double log_det() const { return log_det_; }
  std::int64_t num_updates() const { return num_updates_; }
  std::int64_t num_drift_checks() const { return num_drift_checks_; }
  std::int64_t num_rebaselines() const { return num_rebaselines_; }
  double max_observed_drift() const { return max_observed_drift_; }

  // M += x x^T, w += y x. A zero feature leaves the state untouched.
  void Update(const FeatureVector& x, double y);

  // M^{-1} w.
  Eigen::VectorXd ThetaHat() const;

  // sqrt(x^T M^{-1} x).
  double Bonus(const FeatureVector& x) const;

  // Ellipsoid radius used at stage h:
  //   m2 sqrt(lambda) + (H - h + 1)/2 * sqrt(2 log(1/delta) + log det(M / lambda^d)).
  // With lambda = 1 the last term is the stored log det.
  double Radius(int h, int horizon, double norm_bound, double delta) const;

  // ||theta - theta_hat||_M <= radius.
  bool InConfidenceSet(std::span<const double> theta, double radius) const;
  double MahalanobisDistance(std::span<const double> theta) const;

  // Recomputes M^{-1} directly, returns max |incremental - direct| and
  // replaces the inverse when that exceeds kDriftTolerance.
  double Rebaseline();

 private:
  int dim_;
  double lambda_;
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd gram_inv_;
  Eigen::VectorXd target_sum_;
  double log_det_;
  std::int64_t num_updates_ = 0;
  std::int64_t num_drift_checks_ = 0;
  std::int64_t num_rebaselines_ = 0;
  double max_observed_drift_ = 0.0;
  // Scratch for Update; sized once.
  Eigen::VectorXd scratch_;
  std::vector<int> support_;
};

}  // namespace vtrlab

#endif  // VTRLAB_REGRESSION_H_
