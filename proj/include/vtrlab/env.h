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

#ifndef VTRLAB_ENV_H_
#define VTRLAB_ENV_H_

#include <array>
#include <vector>

#include "vtrlab/mdp.h"

namespace vtrlab {

// An environment as the agents see it: the true tabular model plus its
// linear-mixture representation.
struct Environment {
  TabularMdp mdp;
  LinearMixtureMdp mixture;
};

inline constexpr int kSwimLeft = 0;
inline constexpr int kSwimRight = 1;

// Chain of S states, start at the left end. Left always moves left; right
// fights the current. horizon <= 0 selects the default 4 S.
struct RiverSwimSpec {
  int num_states = 5;
  int horizon = 0;
  double p_right_success = 0.3;
  double p_right_stay = 0.6;
  double p_right_back = 0.1;
  double reward_left_at_s1 = 0.005;
  double reward_right_at_sN = 1.0;

  int effective_horizon() const { return horizon > 0 ? horizon : 4 * num_states; }
};

// Two-level tree with H = 2 and two actions. State 0 is the root, 1 and 2
// the branch states, then m terminals under state 1 followed by m under
// state 2. Only the root decision matters: every action at state 2 earns 1.
struct WideTreeSpec {
  int terminals_per_branch = 4;

  int num_states() const { return 3 + 2 * terminals_per_branch; }
};

Environment BuildRiverSwim(const RiverSwimSpec& spec);
Environment BuildWideTree(const WideTreeSpec& spec);

// Component index of the indicator basis: s * (A S) + a * S + s'.
inline int MixtureIndex(int num_states, int num_actions, int s, int a, int next) {
  return s * (num_actions * num_states) + a * num_states + next;
}

// Tabular embedding with d = S^2 A indicator kernels and theta* equal to
// the flattened transition tensor.
LinearMixtureMdp TabularToMixture(const TabularMdp& mdp);

// One parameterization of the RiverSwim calibration grid together with the
// optimal initial values it produces for S = 3, 4, 5 (H = 4 S).
struct CalibrationRow {
  double p_right_success;
  double p_right_stay;
  double p_right_back;
  double reward_left_at_s1;
  std::array<double, 3> optimal_values;
  bool matches_reference;
};

inline constexpr std::array<double, 3> kRiverSwimReferenceValues = {5.72, 5.66, 5.6};
inline constexpr double kRiverSwimReferenceTolerance = 0.01;

// Success in {0.3, 0.35, 0.6}, back in {0.05, 0.1} with stay the
// complement, left reward in {0.005, 0.01, 0.05}; right reward fixed at 1.
std::vector<CalibrationRow> RiverSwimCalibrationSweep();

}  // namespace vtrlab

#endif  // VTRLAB_ENV_H_
