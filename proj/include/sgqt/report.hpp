// Copyright 2026 The SGQT Authors
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

#ifndef SGQT_REPORT_HPP
#define SGQT_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "sgqt/experiments.hpp"

namespace sgqt {

/// Shortest round-trippable decimal form, locale independent.
std::string format_double(double v);

/// Schema: k,infidelity,f_plus,f_minus — one row per iteration.
std::string trajectory_csv(const Trajectory &traj);

/// Schema: k,median,q25,q75 — one row per iteration.
std::string summary_csv(const EnsembleSummary &summary);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column_index(const std::string &name) const;  // throws FitError if missing
    std::vector<double> column(const std::string &name) const;
};

CsvTable parse_csv(const std::string &text);
CsvTable read_csv_file(const std::string &path);

void write_file(const std::string &path, const std::string &content);

/// Minimal log-log SVG line plot; one polyline per labelled series.
struct SvgSeries {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
};
std::string loglog_svg(const std::vector<SvgSeries> &series,
                       const std::string &x_label,
                       const std::string &y_label);

}  // namespace sgqt

#endif
