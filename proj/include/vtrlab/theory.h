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

#ifndef VTRLAB_THEORY_H_
#define VTRLAB_THEORY_H_

#include <span>
#include <vector>

namespace vtrlab {

// A finite class of real functions on n abstract points, one row per
// function. Every |entry| must be <= bound.
class FiniteFunctionClass {
 public:
  FiniteFunctionClass(int num_points, std::vector<std::vector<double>> table,
                      double bound);

  int num_points() const { return num_points_; }
  int num_functions() const { return static_cast<int>(table_.size()); }
  double bound() const { return bound_; }
  double value(int f, int x) const { return table_[f][x]; }
  std::span<const double> row(int f) const { return table_[f]; }

 private:
  int num_points_;
  std::vector<std::vector<double>> table_;
  double bound_;
};

// Confidence width of the general nonlinear least-squares set at episode k:
//   2 H^2 (log(2/delta) + log N) + 2 H (kH - 1) alpha (2 + sqrt(log(4 kH (kH - 1) / delta)))
// where log N is the log sup-norm covering number at scale alpha. The second
// term is exactly zero when kH = 1.
double GeneralBeta(double alpha, double delta, int horizon, long long episode,
                   double log_covering);

inline constexpr int kMaxCoverFunctions = 64;
inline constexpr int kMaxEluderPoints = 8;
inline constexpr int kMaxEluderFunctions = 32;

// Smallest G subset of F with every f within sup-distance alpha of some g,
// by exact branch-and-bound set cover. |F| <= 64.
int CoveringNumberBruteForce(const FiniteFunctionClass& fc, double alpha);

// Length of the longest sequence of points in which every element after the
// first is eps'-independent of its prefix, for a common eps' >= epsilon.
// The first element carries no constraint, so any nonempty domain gives at
// least 1. |X| <= 8, |F| <= 32.
//
// Independence of x from a prefix depends only on the prefix as a set, so
// the search runs over subsets: for each subset it keeps the exact set of
// eps' (a union of half-open intervals [norm, gap)) for which some ordering
// of the subset is valid.
int EluderDimensionBruteForce(const FiniteFunctionClass& fc, double epsilon);

}  // namespace vtrlab

#endif  // VTRLAB_THEORY_H_
