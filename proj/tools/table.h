// Copyright 2026 The circlefix Authors
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

#ifndef CIRCLEFIX_TOOLS_TABLE_H_
#define CIRCLEFIX_TOOLS_TABLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace circlefix::cli {

// One row of the summary table of possible fixed-point counts.
struct TableRow {
  int64_t dim = 0;
  std::vector<int64_t> possible_values;  // first three admissible counts
  int64_t kosniowski = 0;
  int64_t hamiltonian = 0;
  std::optional<std::vector<int64_t>> c1_zero_variant;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Rows for even dimensions lo..hi. Throws kInvalidArgument on a bad range.
std::vector<TableRow> BuildTable(int64_t dim_lo, int64_t dim_hi);

std::string RenderCsv(const std::vector<TableRow>& rows);
std::string RenderJson(const std::vector<TableRow>& rows);
std::string RenderMarkdown(const std::vector<TableRow>& rows);

std::vector<TableRow> ParseCsv(const std::string& text);
std::vector<TableRow> ParseJson(const std::string& text);
std::vector<TableRow> ParseMarkdown(const std::string& text);

}  // namespace circlefix::cli

#endif  // CIRCLEFIX_TOOLS_TABLE_H_
