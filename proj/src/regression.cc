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

#include "vtrlab/regression.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "vtrlab/error.h"

namespace vtrlab {

double FeatureVector::Dot(std::span<const double> dense) const {
  double total = 0.0;
  for (std::size_t k = 0; k < index.size(); ++k) total += value[k] * dense[index[k]];
  return total;
}

Eigen::VectorXd FeatureVector::Dense() const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
  for (std::size_t k = 0; k < index.size(); ++k) x[index[k]] = value[k];
  return x;
}

FeatureVector Features(const LinearMixtureMdp& mixture,
                       std::span<const double> next_values, int s, int a) {
  std::vector<std::pair<int, double>> terms;
  for (const BasisEntry& e : mixture.entries(s, a)) {
    terms.emplace_back(e.component, e.weight * next_values[e.next_state]);
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  FeatureVector x;
  x.dim = mixture.dim();
  for (std::size_t k = 0; k < terms.size();) {
    const int component = terms[k].first;
    double total = 0.0;
    for (; k < terms.size() && terms[k].first == component; ++k) total += terms[k].second;
    if (total != 0.0) {
      x.index.push_back(component);
      x.value.push_back(total);
    }
  }
  return x;
}

RegressionState::RegressionState(int dim, double lambda)
    : dim_(dim), lambda_(lambda) {
  if (dim < 1) throw InvalidArgumentError("RegressionState: dim must be >= 1");
  if (!(lambda > 0.0)) throw InvalidArgumentError("RegressionState: lambda must be positive");
  gram_ = lambda * Eigen::MatrixXd::Identity(dim, dim);
  gram_inv_ = (1.0 / lambda) * Eigen::MatrixXd::Identity(dim, dim);
  target_sum_ = Eigen::VectorXd::Zero(dim);
  log_det_ = dim * std::log(lambda);
  scratch_ = Eigen::VectorXd::Zero(dim);
  support_.reserve(dim);
}

void RegressionState::Update(const FeatureVector& x, double y) {
  if (x.empty()) return;
  const std::size_t nnz = x.index.size();
  for (std::size_t i = 0; i < nnz; ++i) {
    target_sum_[x.index[i]] += y * x.value[i];
    for (std::size_t j = 0; j < nnz; ++j) {
      gram_(x.index[i], x.index[j]) += x.value[i] * x.value[j];
    }
  }

  // u = M^{-1} x touches only the columns in x's support, and the rank-one
  // correction u u^T / (1 + x^T u) only the rows/columns where u != 0.
  Eigen::VectorXd& u = scratch_;
  u.setZero();
  for (std::size_t k = 0; k < nnz; ++k) u.noalias() += x.value[k] * gram_inv_.col(x.index[k]);
  double quad = 0.0;
  for (std::size_t k = 0; k < nnz; ++k) quad += x.value[k] * u[x.index[k]];
  const double denom = 1.0 + quad;
  support_.clear();
  for (int i = 0; i < dim_; ++i) {
    if (u[i] != 0.0) support_.push_back(i);
  }
  for (int c : support_) {
    const double scale = u[c] / denom;
    for (int r : support_) gram_inv_(r, c) -= u[r] * scale;
  }
  log_det_ += std::log1p(quad);
  ++num_updates_;
  if (num_updates_ % kRebaselineInterval == 0) Rebaseline();
}

Eigen::VectorXd RegressionState::ThetaHat() const { return gram_inv_ * target_sum_; }

double RegressionState::Bonus(const FeatureVector& x) const {
  double quad = 0.0;
  const std::size_t nnz = x.index.size();
  for (std::size_t i = 0; i < nnz; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < nnz; ++j) row += gram_inv_(x.index[i], x.index[j]) * x.value[j];
    quad += x.value[i] * row;
  }
  return std::sqrt(std::max(quad, 0.0));
}

double RegressionState::Radius(int h, int horizon, double norm_bound,
                               double delta) const {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgumentError("RegressionState::Radius: delta must lie in (0, 1)");
  }
  const double log_det_ratio = log_det_ - dim_ * std::log(lambda_);
  const double stage_range = horizon - h + 1;
  return norm_bound * std::sqrt(lambda_) +
         0.5 * stage_range * std::sqrt(2.0 * std::log(1.0 / delta) + log_det_ratio);
}

double RegressionState::MahalanobisDistance(std::span<const double> theta) const {
  if (theta.size() != static_cast<std::size_t>(dim_)) {
    throw InvalidArgumentError("RegressionState: theta has wrong dimension");
  }
  const Eigen::VectorXd diff =
      Eigen::Map<const Eigen::VectorXd>(theta.data(), dim_) - ThetaHat();
  return std::sqrt(std::max(diff.dot(gram_ * diff), 0.0));
}

bool RegressionState::InConfidenceSet(std::span<const double> theta,
                                      double radius) const {
  return MahalanobisDistance(theta) <= radius;
}

double RegressionState::Rebaseline() {
  const Eigen::LLT<Eigen::MatrixXd> llt(gram_);
  const Eigen::MatrixXd direct = llt.solve(Eigen::MatrixXd::Identity(dim_, dim_));
  const double drift = (gram_inv_ - direct).cwiseAbs().maxCoeff();
  ++num_drift_checks_;
  max_observed_drift_ = std::max(max_observed_drift_, drift);
  if (drift > kDriftTolerance) {
    gram_inv_ = direct;
    const auto& l = llt.matrixL();
    double log_det = 0.0;
    for (int i = 0; i < dim_; ++i) log_det += 2.0 * std::log(l(i, i));
    log_det_ = log_det;
    ++num_rebaselines_;
  }
  return drift;
}

}  // namespace vtrlab
