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

#include "vtrlab/csv.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "vtrlab/error.h"

namespace vtrlab {
namespace {

void AppendNumber(std::string& out, double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  out += buf;
}

void AppendOptional(std::string& out, const std::vector<double>& series, std::size_t i) {
  out += ',';
  if (i < series.size()) AppendNumber(out, series[i]);
}

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double ParseField(const std::string& field, int line_no) {
  if (field.empty()) throw Error("csv line " + std::to_string(line_no) + ": empty required field");
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(field.c_str(), &end);
  if (errno != 0 || end != field.c_str() + field.size()) {
    throw Error("csv line " + std::to_string(line_no) + ": bad number '" + field + "'");
  }
  return value;
}

std::optional<double> ParseOptional(const std::string& field, int line_no) {
  if (field.empty()) return std::nullopt;
  return ParseField(field, line_no);
}

}  // namespace

std::string FormatCurvesCsv(const AggregateCurves& curves) {
  std::string out = kCurveCsvHeader;
  out += '\n';
  const std::size_t n = curves.num_episodes();
  for (std::size_t i = 0; i < n; ++i) {
    out += std::to_string(i + 1);
    out += ',';
    AppendNumber(out, curves.pseudo_regret_mean[i]);
    out += ',';
    AppendNumber(out, curves.pseudo_regret_stderr[i]);
    out += ',';
    AppendNumber(out, curves.empirical_regret_mean[i]);
    AppendOptional(out, curves.model_err_vtr_mean, i);
    AppendOptional(out, curves.model_err_canonical_mean, i);
    AppendOptional(out, curves.mix_vtr_fraction_mean, i);
    out += '\n';
  }
  return out;
}

void WriteCurvesCsv(const std::string& path, const AggregateCurves& curves) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open " + path + " for writing: " + std::strerror(errno));
  const std::string text = FormatCurvesCsv(curves);
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw Error("write to " + path + " failed");
}

std::vector<CurveRow> ParseCurvesCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCurveCsvHeader) throw Error("csv: unexpected header");
  std::vector<CurveRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> f = SplitFields(line);
    if (f.size() != 7) {
      throw Error("csv line " + std::to_string(line_no) + ": expected 7 fields, got " +
                  std::to_string(f.size()));
    }
    CurveRow row;
    row.episode = static_cast<int>(ParseField(f[0], line_no));
    row.pseudo_regret_mean = ParseField(f[1], line_no);
    row.pseudo_regret_stderr = ParseField(f[2], line_no);
    row.empirical_regret_mean = ParseField(f[3], line_no);
    row.model_err_vtr = ParseOptional(f[4], line_no);
    row.model_err_canonical = ParseOptional(f[5], line_no);
    row.mix_vtr_frac = ParseOptional(f[6], line_no);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace vtrlab
