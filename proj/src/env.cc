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

#include "vtrlab/env.h"

#include <cmath>

#include "vtrlab/error.h"

namespace vtrlab {
namespace {

void Validate(const RiverSwimSpec& spec) {
  if (spec.num_states < 2) throw InvalidArgumentError("RiverSwim: need S >= 2");
  const double total = spec.p_right_success + spec.p_right_stay + spec.p_right_back;
  if (spec.p_right_success < 0 || spec.p_right_stay < 0 || spec.p_right_back < 0 ||
      std::abs(total - 1.0) > 1e-12) {
    throw InvalidArgumentError("RiverSwim: right-swim probabilities must sum to 1");
  }
  for (double r : {spec.reward_left_at_s1, spec.reward_right_at_sN}) {
    if (r < 0.0 || r > 1.0) throw InvalidArgumentError("RiverSwim: reward outside [0, 1]");
  }
}

}  // namespace

Environment BuildRiverSwim(const RiverSwimSpec& spec) {
  Validate(spec);
  const int S = spec.num_states;
  constexpr int A = 2;
  std::vector<double> p(static_cast<std::size_t>(S) * A * S, 0.0);
  auto at = [&](int s, int a, int next) -> double& {
    return p[(static_cast<std::size_t>(s) * A + a) * S + next];
  };
  for (int s = 0; s < S; ++s) {
    at(s, kSwimLeft, s == 0 ? 0 : s - 1) = 1.0;
    if (s == 0) {
      at(s, kSwimRight, 1) += spec.p_right_success;
      at(s, kSwimRight, 0) += spec.p_right_stay + spec.p_right_back;
    } else if (s == S - 1) {
      at(s, kSwimRight, s) += spec.p_right_success + spec.p_right_stay;
      at(s, kSwimRight, s - 1) += spec.p_right_back;
    } else {
      at(s, kSwimRight, s + 1) += spec.p_right_success;
      at(s, kSwimRight, s) += spec.p_right_stay;
      at(s, kSwimRight, s - 1) += spec.p_right_back;
    }
  }
  std::vector<double> rewards(static_cast<std::size_t>(S) * A, 0.0);
  rewards[0 * A + kSwimLeft] = spec.reward_left_at_s1;
  rewards[(S - 1) * A + kSwimRight] = spec.reward_right_at_sN;
  TabularMdp mdp(S, A, spec.effective_horizon(), std::move(p), std::move(rewards), 0);
  LinearMixtureMdp mixture = TabularToMixture(mdp);
  return {std::move(mdp), std::move(mixture)};
}

Environment BuildWideTree(const WideTreeSpec& spec) {
  const int m = spec.terminals_per_branch;
  if (m < 2 || m % 2 != 0) {
    throw InvalidArgumentError("WideTree: terminals per branch must be even and >= 2");
  }
  const int S = spec.num_states();
  constexpr int A = 2;
  std::vector<double> p(static_cast<std::size_t>(S) * A * S, 0.0);
  auto at = [&](int s, int a, int next) -> double& {
    return p[(static_cast<std::size_t>(s) * A + a) * S + next];
  };
  at(0, 0, 1) = 1.0;
  at(0, 1, 2) = 1.0;
  const int half = m / 2;
  for (int branch = 1; branch <= 2; ++branch) {
    const int first_terminal = 3 + (branch - 1) * m;
    for (int a = 0; a < A; ++a) {
      for (int i = 0; i < half; ++i) {
        at(branch, a, first_terminal + a * half + i) = 1.0 / half;
      }
    }
  }
  // Terminals are never acted in within H = 2; they self-loop.
  for (int s = 3; s < S; ++s) {
    for (int a = 0; a < A; ++a) at(s, a, s) = 1.0;
  }
  std::vector<double> rewards(static_cast<std::size_t>(S) * A, 0.0);
  rewards[2 * A + 0] = 1.0;
  rewards[2 * A + 1] = 1.0;
  TabularMdp mdp(S, A, 2, std::move(p), std::move(rewards), 0);
  LinearMixtureMdp mixture = TabularToMixture(mdp);
  return {std::move(mdp), std::move(mixture)};
}

LinearMixtureMdp TabularToMixture(const TabularMdp& mdp) {
  const int S = mdp.num_states();
  const int A = mdp.num_actions();
  const int dim = S * S * A;
  std::vector<std::vector<BasisEntry>> lists(static_cast<std::size_t>(S) * A);
  std::vector<double> theta(dim, 0.0);
  for (int s = 0; s < S; ++s) {
    for (int a = 0; a < A; ++a) {
      auto& list = lists[s * A + a];
      list.reserve(S);
      for (int next = 0; next < S; ++next) {
        const int j = MixtureIndex(S, A, s, a, next);
        list.push_back({j, next, 1.0});
        theta[j] = mdp.transition(s, a, next);
      }
    }
  }
  return LinearMixtureMdp(S, A, dim, std::move(lists), std::move(theta));
}

std::vector<CalibrationRow> RiverSwimCalibrationSweep() {
  std::vector<CalibrationRow> rows;
  for (double success : {0.3, 0.35, 0.6}) {
    for (double back : {0.05, 0.1}) {
      for (double left_reward : {0.005, 0.01, 0.05}) {
        CalibrationRow row{success, 1.0 - success - back, back, left_reward, {}, true};
        for (int i = 0; i < 3; ++i) {
          RiverSwimSpec spec;
          spec.num_states = 3 + i;
          spec.p_right_success = success;
          spec.p_right_stay = row.p_right_stay;
          spec.p_right_back = back;
          spec.reward_left_at_s1 = left_reward;
          const Environment env = BuildRiverSwim(spec);
          const DpSolution dp = ExactValueIteration(env.mdp);
          row.optimal_values[i] = dp.values.v(1, env.mdp.initial_state());
          row.matches_reference &=
              std::abs(row.optimal_values[i] - kRiverSwimReferenceValues[i]) <=
              kRiverSwimReferenceTolerance;
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace vtrlab
