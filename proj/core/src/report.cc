// Copyright 2026 The snowpredict Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snowpredict/report.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace snowpredict {

const WerResult* ReportRow::Find(const std::string& column) const {
  for (const auto& cell : cells) {
    if (cell.column == column) return &cell.result;
  }
  return nullptr;
}

const ReportRow* EvaluationReport::FindRow(const std::string& label) const {
  for (const auto& row : rows) {
    if (row.label == label) return &row;
  }
  return nullptr;
}

double EvaluationReport::Wer(const std::string& row, const std::string& column) const {
  const ReportRow* r = FindRow(row);
  if (r == nullptr) throw std::out_of_range("no report row '" + row + "'");
  const WerResult* cell = r->Find(column);
  if (cell == nullptr) throw std::out_of_range("no report column '" + column + "'");
  return cell->wer();
}

namespace {

std::string Percent(double wer) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * wer);
  return buf;
}

std::string Ratio(double wer) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", wer);
  return buf;
}

void Pad(std::string& out, const std::string& s, std::size_t width, bool right) {
  if (right) out.append(width - std::min(width, s.size()), ' ');
  out += s;
  if (!right) out.append(width - std::min(width, s.size()), ' ');
}

}  // namespace

std::string RenderText(const EvaluationReport& report) {
  std::size_t label_width = 0;
  for (const auto& row : report.rows) label_width = std::max(label_width, row.label.size());
  std::vector<std::size_t> widths;
  for (const auto& c : report.columns) widths.push_back(std::max<std::size_t>(c.size(), 6));

  std::string out;
  if (!report.title.empty()) out += report.title + "\n";
  Pad(out, "", label_width, false);
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out += "  ";
    Pad(out, report.columns[i], widths[i], true);
  }
  out += '\n';
  for (const auto& row : report.rows) {
    Pad(out, row.label, label_width, false);
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
      out += "  ";
      const WerResult* cell = row.Find(report.columns[i]);
      Pad(out, cell == nullptr ? "-" : Percent(cell->wer()), widths[i], true);
    }
    out += '\n';
  }
  if (!report.stats.empty()) {
    out += '\n';
    std::size_t key_width = 0;
    for (const auto& [k, v] : report.stats) key_width = std::max(key_width, k.size());
    for (const auto& [k, v] : report.stats) {
      Pad(out, k, key_width, false);
      out += "  " + v + "\n";
    }
  }
  return out;
}

std::string RenderTsv(const EvaluationReport& report) {
  std::string out = "row\tcolumn\twer\tmistakes\texamples\n";
  for (const auto& row : report.rows) {
    for (const auto& cell : row.cells) {
      out += row.label + "\t" + cell.column + "\t" + Ratio(cell.result.wer()) + "\t" +
             std::to_string(cell.result.mistakes) + "\t" +
             std::to_string(cell.result.total) + "\n";
    }
  }
  for (const auto& [k, v] : report.stats) out += "#\t" + k + "\t" + v + "\n";
  return out;
}

}  // namespace snowpredict
