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

#ifndef VTRLAB_MDP_H_
#define VTRLAB_MDP_H_

#include <cstddef>
#include <span>
#include <vector>

#include "vtrlab/rng.h"

namespace vtrlab {

// Finite-horizon MDP with known rewards and a time-homogeneous kernel.
// Transitions are stored row-major as (s, a, s'), rewards as (s, a).
class TabularMdp {
 public:
  // Validates every invariant: rows are nonnegative and sum to one within
  // 1e-12, rewards lie in [0, 1] and the initial state is in range.
  TabularMdp(int num_states, int num_actions, int horizon,
             std::vector<double> transitions, std::vector<double> rewards,
             int initial_state);

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  int horizon() const { return horizon_; }
  int initial_state() const { return initial_state_; }

  double transition(int s, int a, int next) const {
    return transitions_[RowOffset(s, a) + next];
  }
  std::span<const double> row(int s, int a) const {
    return {transitions_.data() + RowOffset(s, a),
            static_cast<std::size_t>(num_states_)};
  }
  double reward(int s, int a) const { return rewards_[s * num_actions_ + a]; }

  std::span<const double> transitions() const { return transitions_; }
  std::span<const double> rewards() const { return rewards_; }

 private:
  std::size_t RowOffset(int s, int a) const {
    return (static_cast<std::size_t>(s) * num_actions_ + a) * num_states_;
  }

  int num_states_;
  int num_actions_;
  int horizon_;
  int initial_state_;
  std::vector<double> transitions_;
  std::vector<double> rewards_;
};

// One nonzero of basis kernel P_j(s' | s, a), grouped by (s, a).
struct BasisEntry {
  int component;
  int next_state;
  double weight;
};

// d known basis kernels plus the true mixing weights theta*.
// P(s'|s,a) = sum_j theta*_j P_j(s'|s,a). Basis entries may be signed.
// The basis is kept sparse per (s, a) because the tabular embedding has
// only S nonzeros per row out of d = S^2 A components.
class LinearMixtureMdp {
 public:
  // entries_by_pair[s * A + a] lists the nonzeros of that row.
  LinearMixtureMdp(int num_states, int num_actions, int dim,
                   std::vector<std::vector<BasisEntry>> entries_by_pair,
                   std::vector<double> theta_star);

  // Dense basis laid out as (j, s, a, s'). Exact zeros are dropped.
  static LinearMixtureMdp FromDense(int num_states, int num_actions, int dim,
                                    std::span<const double> dense_basis,
                                    std::vector<double> theta_star);

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  int dim() const { return dim_; }
  std::span<const double> theta_star() const { return theta_star_; }

  std::span<const BasisEntry> entries(int s, int a) const {
    const std::size_t pair = static_cast<std::size_t>(s) * num_actions_ + a;
    return {entries_.data() + offsets_[pair], offsets_[pair + 1] - offsets_[pair]};
  }

  // P_j(next | s, a); linear in the row's nonzero count.
  double basis(int component, int s, int a, int next) const;

  // sum_j theta_j P_j(. | s, a) for every (s, a), without any projection.
  std::vector<double> Expand(std::span<const double> theta) const;

 private:
  int num_states_;
  int num_actions_;
  int dim_;
  std::vector<std::size_t> offsets_;
  std::vector<BasisEntry> entries_;
  std::vector<double> theta_star_;
};

// Deterministic nonstationary policy, stages h = 1..H.
class NonstationaryPolicy {
 public:
  NonstationaryPolicy(int num_states, int horizon)
      : num_states_(num_states), horizon_(horizon),
        actions_(static_cast<std::size_t>(num_states) * horizon, 0) {}

  int horizon() const { return horizon_; }
  int num_states() const { return num_states_; }
  int action(int h, int s) const { return actions_[Index(h, s)]; }
  void set_action(int h, int s, int a) { actions_[Index(h, s)] = a; }

 private:
  std::size_t Index(int h, int s) const {
    return static_cast<std::size_t>(h - 1) * num_states_ + s;
  }

  int num_states_;
  int horizon_;
  std::vector<int> actions_;
};

// Stage-indexed Q and V for h = 1..H+1. Stage H+1 is identically zero.
class ValueTables {
 public:
  ValueTables(int num_states, int num_actions, int horizon);

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  int horizon() const { return horizon_; }

  double q(int h, int s, int a) const { return q_[QIndex(h, s, a)]; }
  double& q(int h, int s, int a) { return q_[QIndex(h, s, a)]; }
  double v(int h, int s) const { return v_[VIndex(h, s)]; }
  double& v(int h, int s) { return v_[VIndex(h, s)]; }

  std::span<const double> v_stage(int h) const {
    return {v_.data() + VIndex(h, 0), static_cast<std::size_t>(num_states_)};
  }
  std::span<const double> q_row(int h, int s) const {
    return {q_.data() + QIndex(h, s, 0), static_cast<std::size_t>(num_actions_)};
  }

 private:
  std::size_t QIndex(int h, int s, int a) const {
    return (static_cast<std::size_t>(h - 1) * num_states_ + s) * num_actions_ + a;
  }
  std::size_t VIndex(int h, int s) const {
    return static_cast<std::size_t>(h - 1) * num_states_ + s;
  }

  int num_states_;
  int num_actions_;
  int horizon_;
  std::vector<double> q_;
  std::vector<double> v_;
};

struct DpSolution {
  ValueTables values;
  NonstationaryPolicy policy;
};

// Lowest-index argmax of q(h, s, .).
int GreedyAction(const ValueTables& values, int h, int s);

// Stagewise greedy policy of a value table.
NonstationaryPolicy GreedyPolicy(const ValueTables& values);

// Builds the tabular MDP induced by theta*. Negative round-off down to
// -1e-12 is clamped and the row renormalized; rows off by more than 1e-9
// raise InvalidMixtureError.
TabularMdp Materialize(const LinearMixtureMdp& mixture,
                       std::vector<double> rewards, int horizon,
                       int initial_state);

// Backward induction on the true model. Ties go to the lowest action.
DpSolution ExactValueIteration(const TabularMdp& mdp);

// V_1^pi(s0) of the policy that plays pi(h, s) with probability 1 - epsilon
// and a uniform action otherwise. epsilon = 0 evaluates pi itself.
double PolicyEvaluation(const TabularMdp& mdp, const NonstationaryPolicy& policy,
                        double epsilon = 0.0);

// Largest number of policies BruteForceOptimal will enumerate.
inline constexpr double kMaxEnumeratedPolicies = 1e6;

// max over all A^(S H) deterministic nonstationary policies of
// PolicyEvaluation. Throws InstanceTooLargeError past the guard.
double BruteForceOptimal(const TabularMdp& mdp);

// Inverse-CDF draw from row (s, a), scanning s' upward.
int SampleTransition(const TabularMdp& mdp, int s, int a, double uniform);
int SampleTransition(const TabularMdp& mdp, int s, int a, CounterRng& rng);

}  // namespace vtrlab

#endif  // VTRLAB_MDP_H_
