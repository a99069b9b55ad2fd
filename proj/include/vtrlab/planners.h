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

#ifndef VTRLAB_PLANNERS_H_
#define VTRLAB_PLANNERS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "vtrlab/canonical_model.h"
#include "vtrlab/mdp.h"
#include "vtrlab/regression.h"

namespace vtrlab {

// Planners run one backward pass over h = H..1 with V_{H+1} = 0.
// Stage radii are passed explicitly (index h - 1) so callers choose the
// confidence parameter; rewards are the (s, a) table of the true MDP.

// sqrt(beta_h) of the value-targeted ellipsoid for h = 1..H.
std::vector<double> VtrStageRadii(const RegressionState& reg, int horizon,
                                  double norm_bound, double delta);

// B^MAT_h of the canonical ellipsoid for h = 1..H.
std::vector<double> MatrixRlStageRadii(const CanonicalModelState& canon,
                                       int horizon, double delta);

// Q(h,s,a) = r + <x, theta> + radius_h * ||x||_{M^{-1}} with x the features
// of V_{h+1}; V(h,s) = max_a Q clipped to [0, H - h + 1].
ValueTables OptimisticValueIteration(const LinearMixtureMdp& mixture,
                                     std::span<const double> theta,
                                     const RegressionState& reg,
                                     std::span<const double> rewards, int horizon,
                                     std::span<const double> stage_radius);

// Certainty-equivalent backup of the value-targeted model for an
// epsilon-greedy actor: Q = r + <x, theta>,
// V = (1 - eps) clip_[0,H](max_a Q) + eps/A sum_a Q.
ValueTables EgValueIteration(const LinearMixtureMdp& mixture,
                             std::span<const double> theta,
                             std::span<const double> rewards, int horizon,
                             double epsilon);

// Backup of the canonical model: Q = r + phi^T M_k V_{h+1}. With stage
// radii, adds radius_h * sqrt(phi^T A^{-1} phi) and clips the greedy value
// to [0, H - h + 1]; with no radii, combines as EgValueIteration does.
ValueTables MatrixRlValueIteration(const CanonicalModelState& canon,
                                   std::span<const double> rewards, int horizon,
                                   std::span<const double> stage_radius,
                                   double epsilon);

struct ModelChoiceTally {
  std::int64_t vtr = 0;
  std::int64_t canonical = 0;

  std::int64_t total() const { return vtr + canonical; }
  ModelChoiceTally& operator+=(const ModelChoiceTally& other) {
    vtr += other.vtr;
    canonical += other.canonical;
    return *this;
  }
};

struct MixPlan {
  ValueTables values;
  ModelChoiceTally tally;
};

// Per (h, s, a) uses whichever model has the smaller exploration term,
// the value-targeted one on ties. Radii should already carry the split
// confidence level delta / 2. canonical_enabled = false forces the
// value-targeted branch everywhere.
MixPlan MixValueIteration(const LinearMixtureMdp& mixture,
                          std::span<const double> theta,
                          const RegressionState& reg,
                          const CanonicalModelState& canon,
                          std::span<const double> rewards, int horizon,
                          std::span<const double> vtr_radius,
                          std::span<const double> canonical_radius,
                          bool canonical_enabled = true);

}  // namespace vtrlab

#endif  // VTRLAB_PLANNERS_H_
