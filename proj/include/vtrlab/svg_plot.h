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

#ifndef VTRLAB_SVG_PLOT_H_
#define VTRLAB_SVG_PLOT_H_

#include <span>
#include <string>

#include "vtrlab/metrics.h"

namespace vtrlab {

struct PlotSeries {
  std::string label;
  const AggregateCurves* curves = nullptr;
};

// Two stacked panels: cumulative pseudo-regret and weighted-L1 model error,
// each mean line with a one-stderr band. Every series becomes one
// <g class="series"> element. Long curves are thinned to about
// kMaxPlotPoints vertices.
inline constexpr int kMaxPlotPoints = 500;

std::string FormatPlotSvg(std::span<const PlotSeries> series, const std::string& title);

void WritePlotSvg(const std::string& path, std::span<const PlotSeries> series,
                  const std::string& title);

}  // namespace vtrlab

#endif  // VTRLAB_SVG_PLOT_H_
