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

#include "vtrlab/theory.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "vtrlab/error.h"

namespace vtrlab {
namespace {

// Sorted, disjoint, nonempty half-open intervals [lo, hi).
using IntervalSet = std::vector<std::pair<double, double>>;

IntervalSet Normalize(IntervalSet intervals) {
  std::erase_if(intervals, [](const auto& iv) { return !(iv.first < iv.second); });
  std::sort(intervals.begin(), intervals.end());
  IntervalSet merged;
  for (const auto& iv : intervals) {
    if (!merged.empty() && iv.first <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, iv.second);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

IntervalSet Intersect(const IntervalSet& a, const IntervalSet& b) {
  IntervalSet out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].first, b[j].first);
    const double hi = std::min(a[i].second, b[j].second);
    if (lo < hi) out.emplace_back(lo, hi);
    if (a[i].second < b[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

struct CoverSearch {
  int n;
  std::vector<std::uint64_t> covers;  // covers[g]: functions within alpha of g
  std::uint64_t all;
  int best;

  void Run(std::uint64_t covered, int used) {
    if (covered == all) {
      best = std::min(best, used);
      return;
    }
    if (used + 1 >= best) return;
    const int target = std::countr_zero(~covered & all);
    for (int g = 0; g < n; ++g) {
      if ((covers[g] >> target) & 1ULL) Run(covered | covers[g], used + 1);
    }
  }
};

}  // namespace

FiniteFunctionClass::FiniteFunctionClass(int num_points,
                                         std::vector<std::vector<double>> table,
                                         double bound)
    : num_points_(num_points), table_(std::move(table)), bound_(bound) {
  if (num_points < 1) throw InvalidArgumentError("FiniteFunctionClass: need at least one point");
  if (table_.empty()) throw InvalidArgumentError("FiniteFunctionClass: need at least one function");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != num_points) {
      throw InvalidArgumentError("FiniteFunctionClass: ragged table");
    }
    for (double v : row) {
      if (!(std::abs(v) <= bound)) {
        throw InvalidArgumentError("FiniteFunctionClass: entry exceeds the bound");
      }
    }
  }
}

double GeneralBeta(double alpha, double delta, int horizon, long long episode,
                   double log_covering) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgumentError("GeneralBeta: alpha must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgumentError("GeneralBeta: delta must lie in (0, 1)");
  if (horizon < 1 || episode < 1) throw InvalidArgumentError("GeneralBeta: H and k must be >= 1");
  if (!(log_covering >= 0.0)) throw InvalidArgumentError("GeneralBeta: log covering number must be >= 0");
  const double H = horizon;
  const double t = static_cast<double>(episode) * horizon;
  const double confidence = 2.0 * H * H * (std::log(2.0 / delta) + log_covering);
  if (t == 1.0) return confidence;
  const double discretization =
      2.0 * H * (t - 1.0) * alpha * (2.0 + std::sqrt(std::log(4.0 * t * (t - 1.0) / delta)));
  return confidence + discretization;
}

int CoveringNumberBruteForce(const FiniteFunctionClass& fc, double alpha) {
  const int n = fc.num_functions();
  if (n > kMaxCoverFunctions) throw InstanceTooLargeError("CoveringNumberBruteForce: |F| > 64");
  if (!(alpha >= 0.0)) throw InvalidArgumentError("CoveringNumberBruteForce: alpha must be >= 0");
  CoverSearch search{n, std::vector<std::uint64_t>(n, 0),
                     n == 64 ? ~0ULL : ((1ULL << n) - 1), n};
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      double dist = 0.0;
      for (int x = 0; x < fc.num_points(); ++x) {
        dist = std::max(dist, std::abs(fc.value(f, x) - fc.value(g, x)));
      }
      if (dist <= alpha) search.covers[g] |= 1ULL << f;
    }
  }
  search.Run(0, 0);
  return search.best;
}

int EluderDimensionBruteForce(const FiniteFunctionClass& fc, double epsilon) {
  const int nx = fc.num_points();
  const int nf = fc.num_functions();
  if (nx > kMaxEluderPoints || nf > kMaxEluderFunctions) {
    throw InstanceTooLargeError("EluderDimensionBruteForce: |X| > 8 or |F| > 32");
  }
  if (!(epsilon > 0.0)) throw InvalidArgumentError("EluderDimensionBruteForce: epsilon must be positive");
  const int num_masks = 1 << nx;
  const double inf = std::numeric_limits<double>::infinity();

  // Prefix norms ||(f - f')|_mask||_2 for every ordered pair.
  std::vector<std::pair<int, int>> pairs;
  for (int f = 0; f < nf; ++f) {
    for (int g = 0; g < nf; ++g) {
      if (f != g) pairs.emplace_back(f, g);
    }
  }
  std::vector<double> norm(pairs.size() * num_masks, 0.0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (int mask = 1; mask < num_masks; ++mask) {
      const int low = std::countr_zero(static_cast<unsigned>(mask));
      const double d = fc.value(pairs[p].first, low) - fc.value(pairs[p].second, low);
      const double rest = norm[p * num_masks + (mask & (mask - 1))];
      norm[p * num_masks + mask] = std::sqrt(rest * rest + d * d);
    }
  }

  // feasible[mask]: eps' >= epsilon for which some ordering of mask is valid.
  std::vector<IntervalSet> feasible(num_masks);
  int best = 0;
  for (int mask = 1; mask < num_masks; ++mask) {
    const int size = std::popcount(static_cast<unsigned>(mask));
    if (size == 1) {
      feasible[mask] = {{epsilon, inf}};
    } else {
      IntervalSet acc;
      for (int x = 0; x < nx; ++x) {
        if (!((mask >> x) & 1)) continue;
        const int prefix = mask & ~(1 << x);
        if (feasible[prefix].empty()) continue;
        // x is eps'-independent of prefix iff some pair has
        // norm(prefix) <= eps' < f(x) - f'(x).
        IntervalSet independent;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          const double gap = fc.value(pairs[p].first, x) - fc.value(pairs[p].second, x);
          independent.emplace_back(norm[p * num_masks + prefix], gap);
        }
        const IntervalSet hit = Intersect(feasible[prefix], Normalize(std::move(independent)));
        acc.insert(acc.end(), hit.begin(), hit.end());
      }
      feasible[mask] = Normalize(std::move(acc));
    }
    if (!feasible[mask].empty()) best = std::max(best, size);
  }
  return best;
}

}  // namespace vtrlab
