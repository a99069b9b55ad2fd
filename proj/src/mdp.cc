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

#include "vtrlab/mdp.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "vtrlab/error.h"

namespace vtrlab {
namespace {

constexpr double kStochasticTolerance = 1e-12;
constexpr double kMixtureTolerance = 1e-9;

void Require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgumentError(message);
}

// Q(s, a) = r(s, a) + <P(.|s, a), next_v> for every (s, a).
void Backup(const TabularMdp& mdp, std::span<const double> next_v,
            std::span<double> q) {
  const int S = mdp.num_states();
  const int A = mdp.num_actions();
  for (int s = 0; s < S; ++s) {
    for (int a = 0; a < A; ++a) {
      const auto row = mdp.row(s, a);
      double expected = 0.0;
      for (int next = 0; next < S; ++next) expected += row[next] * next_v[next];
      q[s * A + a] = mdp.reward(s, a) + expected;
    }
  }
}

}  // namespace

TabularMdp::TabularMdp(int num_states, int num_actions, int horizon,
                       std::vector<double> transitions,
                       std::vector<double> rewards, int initial_state)
    : num_states_(num_states),
      num_actions_(num_actions),
      horizon_(horizon),
      initial_state_(initial_state),
      transitions_(std::move(transitions)),
      rewards_(std::move(rewards)) {
  Require(num_states > 0 && num_actions > 0 && horizon > 0,
          "TabularMdp: sizes must be positive");
  Require(initial_state >= 0 && initial_state < num_states,
          "TabularMdp: initial state out of range");
  const std::size_t pairs = static_cast<std::size_t>(num_states) * num_actions;
  Require(transitions_.size() == pairs * num_states,
          "TabularMdp: transition tensor has wrong size");
  Require(rewards_.size() == pairs, "TabularMdp: reward table has wrong size");
  for (int s = 0; s < num_states; ++s) {
    for (int a = 0; a < num_actions; ++a) {
      double total = 0.0;
      for (double p : row(s, a)) {
        Require(p >= 0.0, "TabularMdp: negative transition probability at state " +
                              std::to_string(s) + ", action " + std::to_string(a));
        total += p;
      }
      Require(std::abs(total - 1.0) <= kStochasticTolerance,
              "TabularMdp: row (" + std::to_string(s) + ", " + std::to_string(a) +
                  ") does not sum to one");
    }
  }
  for (double r : rewards_) {
    Require(r >= 0.0 && r <= 1.0, "TabularMdp: reward outside [0, 1]");
  }
}

LinearMixtureMdp::LinearMixtureMdp(
    int num_states, int num_actions, int dim,
    std::vector<std::vector<BasisEntry>> entries_by_pair,
    std::vector<double> theta_star)
    : num_states_(num_states),
      num_actions_(num_actions),
      dim_(dim),
      theta_star_(std::move(theta_star)) {
  Require(num_states > 0 && num_actions > 0 && dim > 0,
          "LinearMixtureMdp: sizes must be positive");
  Require(theta_star_.size() == static_cast<std::size_t>(dim),
          "LinearMixtureMdp: theta* must have dim entries");
  const std::size_t pairs = static_cast<std::size_t>(num_states) * num_actions;
  Require(entries_by_pair.size() == pairs,
          "LinearMixtureMdp: need one entry list per (s, a)");
  offsets_.reserve(pairs + 1);
  offsets_.push_back(0);
  for (auto& list : entries_by_pair) {
    for (const BasisEntry& e : list) {
      Require(e.component >= 0 && e.component < dim,
              "LinearMixtureMdp: basis component out of range");
      Require(e.next_state >= 0 && e.next_state < num_states,
              "LinearMixtureMdp: basis next state out of range");
      entries_.push_back(e);
    }
    offsets_.push_back(entries_.size());
  }
}

LinearMixtureMdp LinearMixtureMdp::FromDense(int num_states, int num_actions,
                                             int dim,
                                             std::span<const double> dense_basis,
                                             std::vector<double> theta_star) {
  const std::size_t S = num_states;
  const std::size_t A = num_actions;
  Require(dense_basis.size() == static_cast<std::size_t>(dim) * S * A * S,
          "LinearMixtureMdp: dense basis has wrong size");
  std::vector<std::vector<BasisEntry>> lists(S * A);
  for (int j = 0; j < dim; ++j) {
    for (std::size_t s = 0; s < S; ++s) {
      for (std::size_t a = 0; a < A; ++a) {
        for (std::size_t next = 0; next < S; ++next) {
          const double w = dense_basis[((j * S + s) * A + a) * S + next];
          if (w != 0.0) {
            lists[s * A + a].push_back({j, static_cast<int>(next), w});
          }
        }
      }
    }
  }
  return LinearMixtureMdp(num_states, num_actions, dim, std::move(lists),
                          std::move(theta_star));
}

double LinearMixtureMdp::basis(int component, int s, int a, int next) const {
  double total = 0.0;
  for (const BasisEntry& e : entries(s, a)) {
    if (e.component == component && e.next_state == next) total += e.weight;
  }
  return total;
}

std::vector<double> LinearMixtureMdp::Expand(std::span<const double> theta) const {
  Require(theta.size() == static_cast<std::size_t>(dim_),
          "LinearMixtureMdp::Expand: theta has wrong dimension");
  const std::size_t S = num_states_;
  std::vector<double> kernel(S * num_actions_ * S, 0.0);
  for (int s = 0; s < num_states_; ++s) {
    for (int a = 0; a < num_actions_; ++a) {
      double* row = kernel.data() + (s * num_actions_ + a) * S;
      for (const BasisEntry& e : entries(s, a)) {
        row[e.next_state] += theta[e.component] * e.weight;
      }
    }
  }
  return kernel;
}

ValueTables::ValueTables(int num_states, int num_actions, int horizon)
    : num_states_(num_states),
      num_actions_(num_actions),
      horizon_(horizon),
      q_(static_cast<std::size_t>(horizon + 1) * num_states * num_actions, 0.0),
      v_(static_cast<std::size_t>(horizon + 1) * num_states, 0.0) {}

int GreedyAction(const ValueTables& values, int h, int s) {
  const auto q = values.q_row(h, s);
  int best = 0;
  for (int a = 1; a < static_cast<int>(q.size()); ++a) {
    if (q[a] > q[best]) best = a;
  }
  return best;
}

NonstationaryPolicy GreedyPolicy(const ValueTables& values) {
  NonstationaryPolicy policy(values.num_states(), values.horizon());
  for (int h = 1; h <= values.horizon(); ++h) {
    for (int s = 0; s < values.num_states(); ++s) {
      policy.set_action(h, s, GreedyAction(values, h, s));
    }
  }
  return policy;
}

TabularMdp Materialize(const LinearMixtureMdp& mixture,
                       std::vector<double> rewards, int horizon,
                       int initial_state) {
  const int S = mixture.num_states();
  const int A = mixture.num_actions();
  std::vector<double> kernel = mixture.Expand(mixture.theta_star());
  for (int s = 0; s < S; ++s) {
    for (int a = 0; a < A; ++a) {
      double* row = kernel.data() + static_cast<std::size_t>(s * A + a) * S;
      double total = 0.0;
      for (int next = 0; next < S; ++next) {
        if (row[next] < -kMixtureTolerance) {
          throw InvalidMixtureError("Materialize: row (" + std::to_string(s) +
                                    ", " + std::to_string(a) +
                                    ") has a negative probability");
        }
        row[next] = std::max(row[next], 0.0);
        total += row[next];
      }
      if (std::abs(total - 1.0) > kMixtureTolerance) {
        throw InvalidMixtureError("Materialize: row (" + std::to_string(s) + ", " +
                                  std::to_string(a) + ") sums to " +
                                  std::to_string(total));
      }
      for (int next = 0; next < S; ++next) row[next] /= total;
    }
  }
  return TabularMdp(S, A, horizon, std::move(kernel), std::move(rewards),
                    initial_state);
}

DpSolution ExactValueIteration(const TabularMdp& mdp) {
  const int S = mdp.num_states();
  const int A = mdp.num_actions();
  const int H = mdp.horizon();
  ValueTables values(S, A, H);
  std::vector<double> q(static_cast<std::size_t>(S) * A);
  std::vector<double> next_v(S, 0.0);
  for (int h = H; h >= 1; --h) {
    for (int s = 0; s < S; ++s) next_v[s] = values.v(h + 1, s);
    Backup(mdp, next_v, q);
    for (int s = 0; s < S; ++s) {
      for (int a = 0; a < A; ++a) values.q(h, s, a) = q[s * A + a];
      values.v(h, s) = values.q(h, s, GreedyAction(values, h, s));
    }
  }
  NonstationaryPolicy policy = GreedyPolicy(values);
  return {std::move(values), std::move(policy)};
}

double PolicyEvaluation(const TabularMdp& mdp, const NonstationaryPolicy& policy,
                        double epsilon) {
  const int S = mdp.num_states();
  const int A = mdp.num_actions();
  Require(policy.horizon() == mdp.horizon() && policy.num_states() == S,
          "PolicyEvaluation: policy shape does not match the MDP");
  std::vector<double> v(S, 0.0);
  std::vector<double> q(static_cast<std::size_t>(S) * A);
  for (int h = mdp.horizon(); h >= 1; --h) {
    Backup(mdp, v, q);
    for (int s = 0; s < S; ++s) {
      const int chosen = policy.action(h, s);
      Require(chosen >= 0 && chosen < A, "PolicyEvaluation: action out of range");
      double value = q[s * A + chosen];
      if (epsilon > 0.0) {
        double mean = 0.0;
        for (int a = 0; a < A; ++a) mean += q[s * A + a];
        value = (1.0 - epsilon) * value + epsilon * mean / A;
      }
      v[s] = value;
    }
  }
  return v[mdp.initial_state()];
}

double BruteForceOptimal(const TabularMdp& mdp) {
  const int S = mdp.num_states();
  const int A = mdp.num_actions();
  const int H = mdp.horizon();
  const int digits = S * H;
  if (std::pow(static_cast<double>(A), digits) > kMaxEnumeratedPolicies) {
    throw InstanceTooLargeError("BruteForceOptimal: A^(S*H) exceeds 1e6 policies");
  }
  NonstationaryPolicy policy(S, H);
  std::vector<int> odometer(digits, 0);
  double best = PolicyEvaluation(mdp, policy);
  while (true) {
    int pos = 0;
    while (pos < digits && odometer[pos] == A - 1) {
      odometer[pos] = 0;
      policy.set_action(pos / S + 1, pos % S, 0);
      ++pos;
    }
    if (pos == digits) break;
    ++odometer[pos];
    policy.set_action(pos / S + 1, pos % S, odometer[pos]);
    best = std::max(best, PolicyEvaluation(mdp, policy));
  }
  return best;
}

int SampleTransition(const TabularMdp& mdp, int s, int a, double uniform) {
  const auto row = mdp.row(s, a);
  double cumulative = 0.0;
  int last_positive = 0;
  for (int next = 0; next < static_cast<int>(row.size()); ++next) {
    if (row[next] <= 0.0) continue;
    cumulative += row[next];
    last_positive = next;
    if (uniform < cumulative) return next;
  }
  return last_positive;
}

int SampleTransition(const TabularMdp& mdp, int s, int a, CounterRng& rng) {
  return SampleTransition(mdp, s, a, rng.Uniform());
}

}  // namespace vtrlab
