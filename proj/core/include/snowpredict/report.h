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

// Word-error-rate tables in the layout of the published result tables.

#ifndef SNOWPREDICT_REPORT_H_
#define SNOWPREDICT_REPORT_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace snowpredict {

struct WerResult {
  std::uint64_t mistakes = 0;
  std::uint64_t total = 0;
  // mistakes / total per confusion set, keyed by "member/member/...".
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> per_set;

  double wer() const {
    return total == 0 ? 0.0 : static_cast<double>(mistakes) / static_cast<double>(total);
  }
};

struct ReportCell {
  std::string column;
  WerResult result;
};

struct ReportRow {
  std::string label;
  std::vector<ReportCell> cells;

  const WerResult* Find(const std::string& column) const;
};

struct EvaluationReport {
  std::string title;
  std::vector<std::string> columns;
  std::vector<ReportRow> rows;
  std::vector<std::pair<std::string, std::string>> stats;

  const ReportRow* FindRow(const std::string& label) const;
  // WER of a cell; throws std::out_of_range if absent.
  double Wer(const std::string& row, const std::string& column) const;
};

// Aligned plain-text table, WER in percent with two decimals, followed by
// the statistics block.
std::string RenderText(const EvaluationReport& report);
// Tab-separated: row, column, wer, mistakes, examples; then stat lines.
std::string RenderTsv(const EvaluationReport& report);

}  // namespace snowpredict

#endif  // SNOWPREDICT_REPORT_H_
