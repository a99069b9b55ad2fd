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

#include <chrono>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"
#include "vtrlab/error.h"
#include "vtrlab/rng.h"

namespace vtrlab {
namespace {

TabularMdp ConstantChain(double reward, int H) {
  return TabularMdp(1, 1, H, {1.0}, {reward}, 0);
}

TEST(TabularMdpTest, RejectsInvalidInput) {
  EXPECT_THROW(TabularMdp(2, 1, 1, {0.5, 0.4, 0.0, 1.0}, {0, 0}, 0), InvalidArgumentError);
  EXPECT_THROW(TabularMdp(2, 1, 1, {1.1, -0.1, 0.0, 1.0}, {0, 0}, 0), InvalidArgumentError);
  EXPECT_THROW(TabularMdp(1, 1, 1, {1.0}, {1.5}, 0), InvalidArgumentError);
  EXPECT_THROW(TabularMdp(1, 1, 1, {1.0}, {0.5}, 1), InvalidArgumentError);
  EXPECT_THROW(TabularMdp(1, 1, 0, {1.0}, {0.5}, 0), InvalidArgumentError);
  EXPECT_THROW(TabularMdp(1, 1, 1, {1.0, 0.0}, {0.5}, 0), InvalidArgumentError);
}

TEST(ExactValueIterationTest, ZeroRewardsGiveZeroValues) {
  CounterRng rng(1);
  TabularMdp base = testing::RandomMdp(3, 2, 4, rng);
  std::vector<double> p(base.transitions().begin(), base.transitions().end());
  TabularMdp mdp(3, 2, 4, p, std::vector<double>(6, 0.0), 0);
  const DpSolution sol = ExactValueIteration(mdp);
  for (int h = 1; h <= 5; ++h) {
    for (int s = 0; s < 3; ++s) EXPECT_EQ(sol.values.v(h, s), 0.0);
  }
  EXPECT_EQ(BruteForceOptimal(mdp), 0.0);
  EXPECT_EQ(PolicyEvaluation(mdp, sol.policy), 0.0);
}

TEST(ExactValueIterationTest, ConstantChain) {
  const DpSolution sol = ExactValueIteration(ConstantChain(1.0, 5));
  EXPECT_DOUBLE_EQ(sol.values.v(1, 0), 5.0);
  EXPECT_EQ(sol.values.v(6, 0), 0.0);
  EXPECT_EQ(sol.values.q(6, 0, 0), 0.0);
}

TEST(ExactValueIterationTest, TiesGoToLowestAction) {
  TabularMdp mdp(1, 3, 2, {1.0, 1.0, 1.0}, {0.5, 0.5, 0.5}, 0);
  const DpSolution sol = ExactValueIteration(mdp);
  EXPECT_EQ(sol.policy.action(1, 0), 0);
  EXPECT_EQ(sol.policy.action(2, 0), 0);
}

// Oracle: enumerate every deterministic nonstationary policy.
TEST(ExactValueIterationTest, MatchesBruteForceOnRandomMdps) {
  const auto start = std::chrono::steady_clock::now();
  CounterRng rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int S = 1 + rng.UniformInt(3);
    const int A = 1 + rng.UniformInt(2);
    const int H = 1 + rng.UniformInt(4);
    const TabularMdp mdp = testing::RandomMdp(S, A, H, rng);
    const DpSolution sol = ExactValueIteration(mdp);
    const double dp = sol.values.v(1, mdp.initial_state());
    ASSERT_NEAR(dp, BruteForceOptimal(mdp), 1e-12) << "trial " << trial;
    ASSERT_EQ(PolicyEvaluation(mdp, sol.policy), dp);
    for (int h = 1; h <= H; ++h) {
      for (int s = 0; s < S; ++s) {
        ASSERT_GE(sol.values.v(h, s), 0.0);
        ASSERT_LE(sol.values.v(h, s), H - h + 1);
      }
    }
    ++checked;
  }
  EXPECT_EQ(checked, 150);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(BruteForceOptimalTest, SingleActionEqualsPolicyEvaluation) {
  CounterRng rng(5);
  const TabularMdp mdp = testing::RandomMdp(3, 1, 3, rng);
  EXPECT_NEAR(BruteForceOptimal(mdp), PolicyEvaluation(mdp, NonstationaryPolicy(3, 3)), 1e-15);
}

TEST(BruteForceOptimalTest, GuardRejectsLargeInstances) {
  CounterRng rng(6);
  const TabularMdp mdp = testing::RandomMdp(5, 2, 5, rng);  // 2^25 policies
  EXPECT_THROW(BruteForceOptimal(mdp), InstanceTooLargeError);
}

// Independent evaluation of the epsilon-mixture policy by forward state
// distribution propagation.
double ForwardEpsilonValue(const TabularMdp& mdp, const NonstationaryPolicy& pi, double eps) {
  const int S = mdp.num_states();
  const int A = mdp.num_actions();
  std::vector<double> dist(S, 0.0);
  dist[mdp.initial_state()] = 1.0;
  double value = 0.0;
  for (int h = 1; h <= mdp.horizon(); ++h) {
    std::vector<double> next(S, 0.0);
    for (int s = 0; s < S; ++s) {
      for (int a = 0; a < A; ++a) {
        const double pa = (a == pi.action(h, s) ? 1.0 - eps : 0.0) + eps / A;
        const double mass = dist[s] * pa;
        value += mass * mdp.reward(s, a);
        for (int n = 0; n < S; ++n) next[n] += mass * mdp.transition(s, a, n);
      }
    }
    dist = next;
  }
  return value;
}

TEST(PolicyEvaluationTest, EpsilonMixtureMatchesForwardPropagation) {
  CounterRng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const TabularMdp mdp = testing::RandomMdp(4, 3, 5, rng);
    NonstationaryPolicy pi(4, 5);
    for (int h = 1; h <= 5; ++h) {
      for (int s = 0; s < 4; ++s) pi.set_action(h, s, rng.UniformInt(3));
    }
    for (double eps : {0.0, 0.1, 0.5, 1.0}) {
      EXPECT_NEAR(PolicyEvaluation(mdp, pi, eps), ForwardEpsilonValue(mdp, pi, eps), 1e-12);
    }
  }
}

TEST(MaterializeTest, SingleComponentIsIdentity) {
  std::vector<std::vector<BasisEntry>> entries = {{{0, 1, 1.0}}, {{0, 0, 0.25}, {0, 1, 0.75}}};
  LinearMixtureMdp mix(2, 1, 1, entries, {1.0});
  const TabularMdp mdp = Materialize(mix, {0.0, 0.0}, 1, 0);
  EXPECT_EQ(mdp.transition(0, 0, 1), 1.0);
  EXPECT_EQ(mdp.transition(1, 0, 0), 0.25);
  EXPECT_EQ(mdp.transition(1, 0, 1), 0.75);
}

TEST(MaterializeTest, EqualMixtureOfDeterministicKernels) {
  // Kernel 0 always goes to state 0, kernel 1 always to state 1.
  std::vector<double> dense(2 * 2 * 1 * 2, 0.0);  // layout (j, s, a, s')
  for (int s = 0; s < 2; ++s) {
    dense[(0 * 2 + s) * 2 + 0] = 1.0;
    dense[(1 * 2 + s) * 2 + 1] = 1.0;
  }
  const LinearMixtureMdp mix = LinearMixtureMdp::FromDense(2, 1, 2, dense, {0.5, 0.5});
  const TabularMdp mdp = Materialize(mix, {0.0, 0.0}, 1, 0);
  for (int s = 0; s < 2; ++s) {
    EXPECT_EQ(mdp.transition(s, 0, 0), 0.5);
    EXPECT_EQ(mdp.transition(s, 0, 1), 0.5);
  }
}

TEST(MaterializeTest, SignedBasisWithStochasticResult) {
  // Kernel 0 rows (1.5, -0.5), kernel 1 rows (-1, 2); the even mixture is
  // (0.25, 0.75) in every row.
  std::vector<double> dense(2 * 2 * 1 * 2);  // layout (j, s, a, s')
  for (int s = 0; s < 2; ++s) {
    dense[(0 * 2 + s) * 2 + 0] = 1.5;
    dense[(0 * 2 + s) * 2 + 1] = -0.5;
    dense[(1 * 2 + s) * 2 + 0] = -1.0;
    dense[(1 * 2 + s) * 2 + 1] = 2.0;
  }
  const LinearMixtureMdp mix = LinearMixtureMdp::FromDense(2, 1, 2, dense, {0.5, 0.5});
  EXPECT_EQ(mix.basis(0, 1, 0, 1), -0.5);
  const TabularMdp mdp = Materialize(mix, {0.0, 0.0}, 1, 0);
  for (int s = 0; s < 2; ++s) {
    EXPECT_DOUBLE_EQ(mdp.transition(s, 0, 0), 0.25);
    EXPECT_DOUBLE_EQ(mdp.transition(s, 0, 1), 0.75);
  }
}

TEST(MaterializeTest, ClampsTinyNegativesAndRejectsLargeDeviations) {
  std::vector<std::vector<BasisEntry>> ok = {{{0, 0, 1.0 + 1e-13}, {0, 1, -1e-13}}};
  const TabularMdp mdp = Materialize(LinearMixtureMdp(2, 1, 1, {ok[0], {{0, 1, 1.0}}}, {1.0}),
                                     {0.0, 0.0}, 1, 0);
  EXPECT_EQ(mdp.transition(0, 0, 1), 0.0);
  EXPECT_DOUBLE_EQ(mdp.transition(0, 0, 0), 1.0);

  std::vector<std::vector<BasisEntry>> bad = {{{0, 0, 0.9}}, {{0, 1, 1.0}}};
  EXPECT_THROW(Materialize(LinearMixtureMdp(2, 1, 1, bad, {1.0}), {0.0, 0.0}, 1, 0),
               InvalidMixtureError);
  std::vector<std::vector<BasisEntry>> negative = {{{0, 0, 1.2}, {0, 1, -0.2}}, {{0, 1, 1.0}}};
  EXPECT_THROW(Materialize(LinearMixtureMdp(2, 1, 1, negative, {1.0}), {0.0, 0.0}, 1, 0),
               InvalidMixtureError);
}

TEST(SampleTransitionTest, InverseCdf) {
  TabularMdp det(3, 1, 1, {0, 1, 0, 0, 1, 0, 0, 1, 0}, {0, 0, 0}, 0);
  for (double u : {0.0, 0.3, 0.999999}) EXPECT_EQ(SampleTransition(det, 0, 0, u), 1);
  TabularMdp half(2, 1, 1, {0.5, 0.5, 0.5, 0.5}, {0, 0}, 0);
  EXPECT_EQ(SampleTransition(half, 0, 0, 0.25), 0);
  EXPECT_EQ(SampleTransition(half, 0, 0, 0.75), 1);
}

TEST(SampleTransitionTest, EmpiricalFrequencies) {
  TabularMdp mdp(3, 1, 1, {0.1, 0.6, 0.3, 1, 0, 0, 1, 0, 0}, {0, 0, 0}, 0);
  CounterRng rng(11);
  std::vector<int> hist(3, 0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++hist[SampleTransition(mdp, 0, 0, rng)];
  EXPECT_NEAR(hist[0] / double(n), 0.1, 0.01);
  EXPECT_NEAR(hist[1] / double(n), 0.6, 0.01);
  EXPECT_NEAR(hist[2] / double(n), 0.3, 0.01);
}

TEST(SampleTransitionTest, NeverReturnsZeroProbabilityState) {
  TabularMdp mdp(3, 1, 1, {0.5, 0.0, 0.5, 1, 0, 0, 1, 0, 0}, {0, 0, 0}, 0);
  CounterRng rng(12);
  for (int i = 0; i < 10000; ++i) EXPECT_NE(SampleTransition(mdp, 0, 0, rng), 1);
}

}  // namespace
}  // namespace vtrlab
