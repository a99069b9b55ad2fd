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

#ifndef VTRLAB_CANONICAL_MODEL_H_
#define VTRLAB_CANONICAL_MODEL_H_

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "vtrlab/counts.h"

namespace vtrlab {

struct Transition {
  int state;
  int action;
  int next_state;
};

// Frequency-based ("canonical") model estimate with tabular features:
// phi(s, a) = e_{sA+a}, psi(s') = e_{s'}, K_psi = I.
//
//   A_k = I + sum phi phi^T                    ((SA) x (SA))
//   M_k = A_k^{-1} sum phi psi^T K_psi^{-1}     ((SA) x S)
//
// M_k is rebuilt from the full cumulative sum after every episode, so
// phi^T M_k equals the ridge-shrunk empirical row N(s,a,.)/(1 + N(s,a)).
class CanonicalModelState {
 public:
  CanonicalModelState(int num_states, int num_actions);

  int num_states() const { return counts_.num_states(); }
  int num_actions() const { return counts_.num_actions(); }
  const Eigen::MatrixXd& a_gram() const { return a_gram_; }
  const Eigen::MatrixXd& a_gram_inv() const { return a_gram_inv_; }
  const Eigen::MatrixXd& m_hat() const { return m_hat_; }
  const Eigen::MatrixXd& cross_sum() const { return cross_sum_; }
  const VisitCounts& counts() const { return counts_; }
  double log_det() const { return log_det_; }

  // Rank-one updates of A for every transition, then M = A^{-1} C.
  void Update(std::span<const Transition> transitions);

  // sqrt(phi(s,a)^T A^{-1} phi(s,a)).
  double Bonus(int s, int a) const;

  // sqrt(|S||A|) + (H - h + 1)/2 * sqrt(2 log(1/delta) + log det A).
  double Radius(int h, int horizon, double delta) const;

  // phi(s,a)^T M_k, the estimated next-state row (not projected).
  double Predicted(int s, int a, int next) const {
    return m_hat_(s * num_actions() + a, next);
  }

 private:
  VisitCounts counts_;
  Eigen::MatrixXd a_gram_;
  Eigen::MatrixXd a_gram_inv_;
  Eigen::MatrixXd cross_sum_;
  Eigen::MatrixXd m_hat_;
  double log_det_ = 0.0;
};

}  // namespace vtrlab

#endif  // VTRLAB_CANONICAL_MODEL_H_
