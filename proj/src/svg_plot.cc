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

#include "vtrlab/svg_plot.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

#include "vtrlab/error.h"

namespace vtrlab {
namespace {

constexpr double kWidth = 720;
constexpr double kPanelHeight = 260;
constexpr double kMarginLeft = 70;
constexpr double kMarginRight = 150;
constexpr double kMarginTop = 40;
constexpr double kPanelGap = 60;
constexpr double kPlotWidth = kWidth - kMarginLeft - kMarginRight;
constexpr double kPlotHeight = kPanelHeight - 40;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::vector<std::size_t> SampleIndices(std::size_t n) {
  std::vector<std::size_t> idx;
  if (n == 0) return idx;
  const std::size_t stride = std::max<std::size_t>(1, n / kMaxPlotPoints);
  for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);
  if (idx.back() != n - 1) idx.push_back(n - 1);
  return idx;
}

struct Panel {
  double top;
  double x_max = 1;
  double y_max = 1;

  double X(double episode) const { return kMarginLeft + kPlotWidth * episode / x_max; }
  double Y(double value) const {
    return top + kPlotHeight - kPlotHeight * std::clamp(value / y_max, 0.0, 1.0);
  }
};

void DrawAxes(std::string& out, const Panel& p, const std::string& label) {
  const double bottom = p.top + kPlotHeight;
  out += "<g class=\"axes\">\n";
  out += "<rect x=\"" + Num(kMarginLeft) + "\" y=\"" + Num(p.top) + "\" width=\"" +
         Num(kPlotWidth) + "\" height=\"" + Num(kPlotHeight) +
         "\" fill=\"none\" stroke=\"#333\"/>\n";
  out += "<text x=\"" + Num(kMarginLeft) + "\" y=\"" + Num(p.top - 8) +
         "\" font-size=\"13\">" + Escape(label) + "</text>\n";
  for (int t = 0; t <= 4; ++t) {
    const double frac = t / 4.0;
    const double y = bottom - kPlotHeight * frac;
    const double x = kMarginLeft + kPlotWidth * frac;
    out += "<text x=\"" + Num(kMarginLeft - 6) + "\" y=\"" + Num(y + 4) +
           "\" font-size=\"10\" text-anchor=\"end\">" + Num(p.y_max * frac) + "</text>\n";
    out += "<text x=\"" + Num(x) + "\" y=\"" + Num(bottom + 14) +
           "\" font-size=\"10\" text-anchor=\"middle\">" + Num(p.x_max * frac) + "</text>\n";
  }
  out += "</g>\n";
}

void DrawCurve(std::string& out, const Panel& p, const std::vector<double>& mean,
               const std::vector<double>* stderr_values, const char* color) {
  const std::vector<std::size_t> idx = SampleIndices(mean.size());
  if (idx.empty()) return;
  if (stderr_values != nullptr && stderr_values->size() == mean.size()) {
    std::string band;
    for (std::size_t i : idx) {
      band += Num(p.X(i + 1)) + "," + Num(p.Y(mean[i] + (*stderr_values)[i])) + " ";
    }
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
      band += Num(p.X(*it + 1)) + "," + Num(p.Y(mean[*it] - (*stderr_values)[*it])) + " ";
    }
    band.pop_back();
    out += "<polygon class=\"band\" points=\"" + band + "\" fill=\"" + color +
           "\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
  }
  std::string line;
  for (std::size_t i : idx) line += Num(p.X(i + 1)) + "," + Num(p.Y(mean[i])) + " ";
  line.pop_back();
  out += "<polyline class=\"mean\" points=\"" + line + "\" fill=\"none\" stroke=\"" + color +
         "\" stroke-width=\"1.5\"/>\n";
}

double MaxOf(const std::vector<double>& mean, const std::vector<double>& err) {
  double m = 0.0;
  for (std::size_t i = 0; i < mean.size(); ++i) {
    const double v = mean[i] + (i < err.size() ? err[i] : 0.0);
    if (std::isfinite(v)) m = std::max(m, v);
  }
  return m;
}

}  // namespace

std::string FormatPlotSvg(std::span<const PlotSeries> series, const std::string& title) {
  Panel regret{kMarginTop};
  Panel error{kMarginTop + kPanelHeight + kPanelGap};
  double x_max = 0, regret_max = 0, error_max = 0;
  for (const PlotSeries& s : series) {
    if (s.curves == nullptr) continue;
    const AggregateCurves& c = *s.curves;
    x_max = std::max(x_max, static_cast<double>(c.num_episodes()));
    regret_max = std::max(regret_max, MaxOf(c.pseudo_regret_mean, c.pseudo_regret_stderr));
    error_max = std::max(error_max, MaxOf(c.model_err_vtr_mean, c.model_err_vtr_stderr));
    error_max =
        std::max(error_max, MaxOf(c.model_err_canonical_mean, c.model_err_canonical_stderr));
  }
  regret.x_max = error.x_max = x_max > 0 ? x_max : 1;
  regret.y_max = regret_max > 0 ? regret_max : 1;
  error.y_max = error_max > 0 ? error_max : 1;

  const double height = error.top + kPanelHeight + 10;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(kWidth) + "\" height=\"" +
         Num(height) + "\" viewBox=\"0 0 " + Num(kWidth) + " " + Num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + Num(kWidth / 2) +
         "\" y=\"20\" font-size=\"15\" text-anchor=\"middle\">" + Escape(title) + "</text>\n";
  DrawAxes(out, regret, "cumulative pseudo-regret");
  DrawAxes(out, error, "model error (weighted L1)");

  int color_index = 0;
  for (const PlotSeries& s : series) {
    const char* color = kPalette[color_index % std::size(kPalette)];
    const double legend_y = kMarginTop + 14 + 18 * color_index;
    ++color_index;
    out += "<g class=\"series\" data-label=\"" + Escape(s.label) + "\">\n";
    if (s.curves != nullptr) {
      const AggregateCurves& c = *s.curves;
      DrawCurve(out, regret, c.pseudo_regret_mean, &c.pseudo_regret_stderr, color);
      DrawCurve(out, error, c.model_err_vtr_mean, &c.model_err_vtr_stderr, color);
      DrawCurve(out, error, c.model_err_canonical_mean, &c.model_err_canonical_stderr, color);
    }
    const double lx = kMarginLeft + kPlotWidth + 12;
    out += "<line x1=\"" + Num(lx) + "\" y1=\"" + Num(legend_y - 4) + "\" x2=\"" +
           Num(lx + 18) + "\" y2=\"" + Num(legend_y - 4) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + Num(lx + 24) + "\" y=\"" + Num(legend_y) + "\" font-size=\"11\">" +
           Escape(s.label) + "</text>\n";
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

void WritePlotSvg(const std::string& path, std::span<const PlotSeries> series,
                  const std::string& title) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open " + path + " for writing: " + std::strerror(errno));
  const std::string text = FormatPlotSvg(series, title);
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw Error("write to " + path + " failed");
}

}  // namespace vtrlab
