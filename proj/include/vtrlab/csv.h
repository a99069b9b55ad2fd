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

#ifndef VTRLAB_CSV_H_
#define VTRLAB_CSV_H_

#include <optional>
#include <string>
#include <vector>

#include "vtrlab/metrics.h"

namespace vtrlab {

inline constexpr char kCurveCsvHeader[] =
    "episode,pseudo_regret_mean,pseudo_regret_stderr,empirical_regret_mean,"
    "model_err_vtr,model_err_canonical,mix_vtr_frac";

// Renders aggregated curves, one row per episode (1-based). Metrics an
// agent does not track are left as empty fields.
std::string FormatCurvesCsv(const AggregateCurves& curves);

void WriteCurvesCsv(const std::string& path, const AggregateCurves& curves);

struct CurveRow {
  int episode = 0;
  double pseudo_regret_mean = 0.0;
  double pseudo_regret_stderr = 0.0;
  double empirical_regret_mean = 0.0;
  std::optional<double> model_err_vtr;
  std::optional<double> model_err_canonical;
  std::optional<double> mix_vtr_frac;
};

// Parses text produced by FormatCurvesCsv. Throws Error on a malformed
// header or row.
std::vector<CurveRow> ParseCurvesCsv(const std::string& text);

}  // namespace vtrlab

#endif  // VTRLAB_CSV_H_
