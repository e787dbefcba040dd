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

#include "sgqt/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace sgqt {

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string trajectory_csv(const Trajectory &traj) {
    std::string out = "k,infidelity,f_plus,f_minus\n";
    for (const auto &r : traj.records) {
        out += std::to_string(r.k);
        out += ',';
        out += format_double(r.true_infidelity);
        out += ',';
        out += format_double(r.estimate_plus);
        out += ',';
        out += format_double(r.estimate_minus);
        out += '\n';
    }
    return out;
}

std::string summary_csv(const EnsembleSummary &summary) {
    std::string out = "k,median,q25,q75\n";
    for (std::size_t i = 0; i < summary.ks.size(); ++i) {
        out += std::to_string(summary.ks[i]);
        out += ',';
        out += format_double(summary.median[i]);
        out += ',';
        out += format_double(summary.q25[i]);
        out += ',';
        out += format_double(summary.q75[i]);
        out += '\n';
    }
    return out;
}

std::size_t CsvTable::column_index(const std::string &name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw FitError("CSV is missing required column: " + name);
    }
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> CsvTable::column(const std::string &name) const {
    const std::size_t idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto &row : rows) {
        out.push_back(row[idx]);
    }
    return out;
}

CsvTable parse_csv(const std::string &text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        if (header) {
            table.columns = cells;
            header = false;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto &cell : cells) {
            double v = 0.0;
            auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc{}) {
                throw FitError("CSV cell is not numeric: " + cell);
            }
            row.push_back(v);
        }
        if (row.size() != table.columns.size()) {
            throw FitError("CSV row width does not match header");
        }
        table.rows.push_back(std::move(row));
    }
    if (table.columns.empty()) {
        throw FitError("CSV has no header row");
    }
    return table;
}

CsvTable read_csv_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FitError("cannot open CSV file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw std::runtime_error("failed writing output file: " + path);
    }
}

std::string loglog_svg(const std::vector<SvgSeries> &series,
                       const std::string &x_label,
                       const std::string &y_label) {
    const double width = 640.0, height = 480.0, margin = 60.0;
    double lx_min = 1e300, lx_max = -1e300, ly_min = 1e300, ly_max = -1e300;
    for (const auto &s : series) {
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (!(s.xs[i] > 0.0) || !(s.ys[i] > 0.0)) {
                continue;
            }
            lx_min = std::min(lx_min, std::log10(s.xs[i]));
            lx_max = std::max(lx_max, std::log10(s.xs[i]));
            ly_min = std::min(ly_min, std::log10(s.ys[i]));
            ly_max = std::max(ly_max, std::log10(s.ys[i]));
        }
    }
    if (lx_min > lx_max || ly_min > ly_max) {
        lx_min = ly_min = 0.0;
        lx_max = ly_max = 1.0;
    }
    if (lx_max == lx_min) lx_max = lx_min + 1.0;
    if (ly_max == ly_min) ly_max = ly_min + 1.0;

    auto px = [&](double lx) { return margin + (lx - lx_min) / (lx_max - lx_min) * (width - 2 * margin); };
    auto py = [&](double ly) { return height - margin - (ly - ly_min) / (ly_max - ly_min) * (height - 2 * margin); };

    static const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
        << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
        << height - margin << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 15
        << "\" text-anchor=\"middle\" font-size=\"14\">log10 " << x_label << "</text>\n";
    svg << "<text x=\"18\" y=\"" << height / 2 << "\" text-anchor=\"middle\" font-size=\"14\" "
        << "transform=\"rotate(-90 18 " << height / 2 << ")\">log10 " << y_label << "</text>\n";

    std::size_t idx = 0;
    for (const auto &s : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << palette[idx % 8] << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (!(s.xs[i] > 0.0) || !(s.ys[i] > 0.0)) {
                continue;
            }
            svg << format_double(px(std::log10(s.xs[i]))) << ','
                << format_double(py(std::log10(s.ys[i]))) << ' ';
        }
        svg << "\"/>\n";
        svg << "<text x=\"" << width - margin + 5 << "\" y=\"" << margin + 16.0 * static_cast<double>(idx)
            << "\" font-size=\"12\" fill=\"" << palette[idx % 8] << "\">" << s.label << "</text>\n";
        ++idx;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace sgqt
