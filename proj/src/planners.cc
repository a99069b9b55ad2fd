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

#include "vtrlab/planners.h"

#include <algorithm>

#include "vtrlab/error.h"

namespace vtrlab {
namespace {

double Clip(double v, double hi) { return std::clamp(v, 0.0, hi); }

void CheckRadii(std::span<const double> radii, int horizon) {
  if (radii.size() != static_cast<std::size_t>(horizon)) {
    throw InvalidArgumentError("planner: need one radius per stage");
  }
}

// (1 - eps) clip_[0,H](max_a q) + eps/A sum_a q.
double DitheredValue(std::span<const double> q, int horizon, double epsilon) {
  double best = q[0];
  double total = 0.0;
  for (double x : q) {
    best = std::max(best, x);
    total += x;
  }
  return (1.0 - epsilon) * Clip(best, horizon) +
         epsilon * total / static_cast<double>(q.size());
}

double GreedyClippedValue(std::span<const double> q, double cap) {
  return Clip(*std::max_element(q.begin(), q.end()), cap);
}

double CanonicalExpectation(const CanonicalModelState& canon, int s, int a,
                            std::span<const double> next_v) {
  const int row = s * canon.num_actions() + a;
  const auto& m = canon.m_hat();
  double total = 0.0;
  for (int next = 0; next < canon.num_states(); ++next) total += m(row, next) * next_v[next];
  return total;
}

}  // namespace

std::vector<double> VtrStageRadii(const RegressionState& reg, int horizon,
                                  double norm_bound, double delta) {
  std::vector<double> radii(horizon);
  for (int h = 1; h <= horizon; ++h) radii[h - 1] = reg.Radius(h, horizon, norm_bound, delta);
  return radii;
}

std::vector<double> MatrixRlStageRadii(const CanonicalModelState& canon,
                                       int horizon, double delta) {
  std::vector<double> radii(horizon);
  for (int h = 1; h <= horizon; ++h) radii[h - 1] = canon.Radius(h, horizon, delta);
  return radii;
}

ValueTables OptimisticValueIteration(const LinearMixtureMdp& mixture,
                                     std::span<const double> theta,
                                     const RegressionState& reg,
                                     std::span<const double> rewards, int horizon,
                                     std::span<const double> stage_radius) {
  CheckRadii(stage_radius, horizon);
  const int S = mixture.num_states();
  const int A = mixture.num_actions();
  ValueTables values(S, A, horizon);
  for (int h = horizon; h >= 1; --h) {
    const auto next_v = values.v_stage(h + 1);
    const double radius = stage_radius[h - 1];
    for (int s = 0; s < S; ++s) {
      for (int a = 0; a < A; ++a) {
        const FeatureVector x = Features(mixture, next_v, s, a);
        values.q(h, s, a) = rewards[s * A + a] + x.Dot(theta) + radius * reg.Bonus(x);
      }
      values.v(h, s) = GreedyClippedValue(values.q_row(h, s), horizon - h + 1);
    }
  }
  return values;
}

ValueTables EgValueIteration(const LinearMixtureMdp& mixture,
                             std::span<const double> theta,
                             std::span<const double> rewards, int horizon,
                             double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw InvalidArgumentError("EgValueIteration: epsilon must lie in [0, 1)");
  }
  const int S = mixture.num_states();
  const int A = mixture.num_actions();
  ValueTables values(S, A, horizon);
  for (int h = horizon; h >= 1; --h) {
    const auto next_v = values.v_stage(h + 1);
    for (int s = 0; s < S; ++s) {
      for (int a = 0; a < A; ++a) {
        values.q(h, s, a) = rewards[s * A + a] + Features(mixture, next_v, s, a).Dot(theta);
      }
      values.v(h, s) = DitheredValue(values.q_row(h, s), horizon, epsilon);
    }
  }
  return values;
}

ValueTables MatrixRlValueIteration(const CanonicalModelState& canon,
                                   std::span<const double> rewards, int horizon,
                                   std::span<const double> stage_radius,
                                   double epsilon) {
  const bool optimistic = !stage_radius.empty();
  if (optimistic) CheckRadii(stage_radius, horizon);
  if (!optimistic && !(epsilon >= 0.0 && epsilon < 1.0)) {
    throw InvalidArgumentError("MatrixRlValueIteration: epsilon must lie in [0, 1)");
  }
  const int S = canon.num_states();
  const int A = canon.num_actions();
  ValueTables values(S, A, horizon);
  for (int h = horizon; h >= 1; --h) {
    const auto next_v = values.v_stage(h + 1);
    for (int s = 0; s < S; ++s) {
      for (int a = 0; a < A; ++a) {
        double q = rewards[s * A + a] + CanonicalExpectation(canon, s, a, next_v);
        if (optimistic) q += stage_radius[h - 1] * canon.Bonus(s, a);
        values.q(h, s, a) = q;
      }
      values.v(h, s) = optimistic
                           ? GreedyClippedValue(values.q_row(h, s), horizon - h + 1)
                           : DitheredValue(values.q_row(h, s), horizon, epsilon);
    }
  }
  return values;
}

MixPlan MixValueIteration(const LinearMixtureMdp& mixture,
                          std::span<const double> theta,
                          const RegressionState& reg,
                          const CanonicalModelState& canon,
                          std::span<const double> rewards, int horizon,
                          std::span<const double> vtr_radius,
                          std::span<const double> canonical_radius,
                          bool canonical_enabled) {
  CheckRadii(vtr_radius, horizon);
  if (canonical_enabled) CheckRadii(canonical_radius, horizon);
  const int S = mixture.num_states();
  const int A = mixture.num_actions();
  MixPlan plan{ValueTables(S, A, horizon), {}};
  ValueTables& values = plan.values;
  for (int h = horizon; h >= 1; --h) {
    const auto next_v = values.v_stage(h + 1);
    for (int s = 0; s < S; ++s) {
      for (int a = 0; a < A; ++a) {
        const FeatureVector x = Features(mixture, next_v, s, a);
        const double vtr_term = vtr_radius[h - 1] * reg.Bonus(x);
        const double canonical_term =
            canonical_enabled ? canonical_radius[h - 1] * canon.Bonus(s, a) : 0.0;
        if (!canonical_enabled || vtr_term <= canonical_term) {
          values.q(h, s, a) = rewards[s * A + a] + x.Dot(theta) + vtr_term;
          ++plan.tally.vtr;
        } else {
          values.q(h, s, a) =
              rewards[s * A + a] + CanonicalExpectation(canon, s, a, next_v) + canonical_term;
          ++plan.tally.canonical;
        }
      }
      values.v(h, s) = GreedyClippedValue(values.q_row(h, s), horizon - h + 1);
    }
  }
  return plan;
}

}  // namespace vtrlab
