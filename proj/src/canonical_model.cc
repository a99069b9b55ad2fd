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

#include "vtrlab/canonical_model.h"

#include <cmath>

#include "vtrlab/error.h"

namespace vtrlab {

CanonicalModelState::CanonicalModelState(int num_states, int num_actions)
    : counts_(num_states, num_actions) {
  const int pairs = num_states * num_actions;
  a_gram_ = Eigen::MatrixXd::Identity(pairs, pairs);
  a_gram_inv_ = Eigen::MatrixXd::Identity(pairs, pairs);
  cross_sum_ = Eigen::MatrixXd::Zero(pairs, num_states);
  m_hat_ = Eigen::MatrixXd::Zero(pairs, num_states);
}

void CanonicalModelState::Update(std::span<const Transition> transitions) {
  if (transitions.empty()) return;
  for (const Transition& t : transitions) {
    const int i = t.state * num_actions() + t.action;
    a_gram_(i, i) += 1.0;
    cross_sum_(i, t.next_state) += 1.0;
    counts_.Add(t.state, t.action, t.next_state);
    // phi = e_i: u = A^{-1} e_i, A^{-1} -= u u^T / (1 + u_i).
    const Eigen::VectorXd u = a_gram_inv_.col(i);
    const double denom = 1.0 + u[i];
    a_gram_inv_.noalias() -= (u / denom) * u.transpose();
    log_det_ += std::log(denom);
  }
  m_hat_.noalias() = a_gram_inv_ * cross_sum_;
}

double CanonicalModelState::Bonus(int s, int a) const {
  const int i = s * num_actions() + a;
  return std::sqrt(std::max(a_gram_inv_(i, i), 0.0));
}

double CanonicalModelState::Radius(int h, int horizon, double delta) const {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgumentError("CanonicalModelState::Radius: delta must lie in (0, 1)");
  }
  const double pairs = static_cast<double>(num_states()) * num_actions();
  return std::sqrt(pairs) +
         0.5 * (horizon - h + 1) * std::sqrt(2.0 * std::log(1.0 / delta) + log_det_);
}

}  // namespace vtrlab
