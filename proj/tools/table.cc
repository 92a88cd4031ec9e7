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

#include "table.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "circlefix/bounds.h"
#include "circlefix/error.h"
#include "json.hpp"

namespace circlefix::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kValuesPerRow = 3;

std::vector<int64_t> Progression(int64_t start, int64_t step) {
  std::vector<int64_t> v;
  for (int i = 0; i < kValuesPerRow; ++i) v.push_back(start + i * step);
  return v;
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Pulls every decimal integer out of `s` in order.
std::vector<int64_t> Integers(const std::string& s) {
  std::vector<int64_t> out;
  for (size_t i = 0; i < s.size();) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back(std::stoll(s.substr(i, j - i)));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

[[noreturn]] void ParseError(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "table parse: " + what);
}

std::string ValuesCell(const std::vector<int64_t>& values) {
  std::string s = "**" + std::to_string(values[0]) + "**";
  for (size_t i = 1; i < values.size(); ++i) s += ", " + std::to_string(values[i]);
  return s + ", …";
}

std::string Stars(size_t count, bool escaped) {
  std::string s;
  for (size_t i = 0; i < count; ++i) s += escaped ? "\\*" : "*";
  return s;
}

constexpr const char* kMarkdownHeader =
    "| dim M = 2n | Possible values of \\|M^S¹\\| if c₁c_{n−1}[M]=0 "
    "| Kosniowski's lower bound ⌊n/2⌋+1 "
    "| Lower bound for Hamiltonian actions n+1 |\n"
    "| --- | --- | --- | --- |\n";

}  // namespace

std::vector<TableRow> BuildTable(int64_t dim_lo, int64_t dim_hi) {
  if (dim_lo % 2 != 0 || dim_hi % 2 != 0 || dim_lo < 4 || dim_lo > dim_hi) {
    throw Error(ErrorCode::kInvalidArgument,
                "dimension range must be even with 4 <= A <= B");
  }
  std::vector<TableRow> rows;
  for (int64_t dim = dim_lo; dim <= dim_hi; dim += 2) {
    const int64_t n = dim / 2;
    TableRow row;
    row.dim = dim;
    row.possible_values = Progression(
        MinFixedPoints(n, false), DivisibilityRefined(n, false).modulus_refined);
    row.kosniowski = n / 2 + 1;
    row.hamiltonian = n + 1;
    auto c1_zero = Progression(MinFixedPoints(n, true),
                               DivisibilityRefined(n, true).modulus_refined);
    if (c1_zero != row.possible_values) row.c1_zero_variant = std::move(c1_zero);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string RenderCsv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "dim,v1,v2,v3,kosniowski,hamiltonian,c1_zero_v1,c1_zero_v2,"
         "c1_zero_v3\n";
  for (const auto& row : rows) {
    out << row.dim;
    for (int64_t v : row.possible_values) out << ',' << v;
    out << ',' << row.kosniowski << ',' << row.hamiltonian;
    for (int i = 0; i < kValuesPerRow; ++i) {
      out << ',';
      if (row.c1_zero_variant) out << (*row.c1_zero_variant)[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string RenderJson(const std::vector<TableRow>& rows) {
  ordered_json doc = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json j;
    j["dim"] = row.dim;
    j["possible_values"] = row.possible_values;
    j["kosniowski"] = row.kosniowski;
    j["hamiltonian"] = row.hamiltonian;
    j["c1_zero_variant"] =
        row.c1_zero_variant ? ordered_json(*row.c1_zero_variant) : ordered_json();
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string RenderMarkdown(const std::vector<TableRow>& rows) {
  // Rows sharing the same c1 = 0 values share one footnote marker.
  std::vector<std::vector<int64_t>> variants;
  auto marker = [&](const std::vector<int64_t>& v) {
    for (size_t i = 0; i < variants.size(); ++i) {
      if (variants[i] == v) return i + 1;
    }
    variants.push_back(v);
    return variants.size();
  };

  std::ostringstream out;
  out << kMarkdownHeader;
  for (const auto& row : rows) {
    out << "| " << row.dim;
    if (row.c1_zero_variant) out << Stars(marker(*row.c1_zero_variant), true);
    out << " | " << ValuesCell(row.possible_values) << " | " << row.kosniowski
        << " | " << row.hamiltonian << " |\n";
  }
  if (!variants.empty()) out << '\n';
  for (size_t i = 0; i < variants.size(); ++i) {
    out << Stars(i + 1, true)
        << " if c₁=0 then the possible values of \\|M^S¹\\| are "
        << ValuesCell(variants[i]) << '\n';
  }
  return out.str();
}

std::vector<TableRow> ParseCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) ParseError("empty CSV");
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    const auto cells = Split(line, ',');
    if (cells.size() != 9) ParseError("CSV row needs 9 cells: " + line);
    TableRow row;
    row.dim = std::stoll(cells[0]);
    for (int i = 1; i <= 3; ++i) row.possible_values.push_back(std::stoll(cells[i]));
    row.kosniowski = std::stoll(cells[4]);
    row.hamiltonian = std::stoll(cells[5]);
    if (!cells[6].empty()) {
      row.c1_zero_variant.emplace();
      for (int i = 6; i <= 8; ++i) row.c1_zero_variant->push_back(std::stoll(cells[i]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> ParseJson(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  std::vector<TableRow> rows;
  for (const auto& j : doc) {
    TableRow row;
    row.dim = j.at("dim").get<int64_t>();
    row.possible_values = j.at("possible_values").get<std::vector<int64_t>>();
    row.kosniowski = j.at("kosniowski").get<int64_t>();
    row.hamiltonian = j.at("hamiltonian").get<int64_t>();
    if (!j.at("c1_zero_variant").is_null()) {
      row.c1_zero_variant = j.at("c1_zero_variant").get<std::vector<int64_t>>();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> ParseMarkdown(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<TableRow> rows;
  std::vector<size_t> row_markers;
  std::map<size_t, std::vector<int64_t>> footnotes;
  while (std::getline(in, line)) {
    if (line.rfind("| ", 0) == 0 && line.size() > 2 &&
        std::isdigit(static_cast<unsigned char>(line[2]))) {
      const auto cells = Split(line, '|');
      if (cells.size() < 5) ParseError("markdown row: " + line);
      TableRow row;
      const std::string dim_cell = Trim(cells[1]);
      row.dim = Integers(dim_cell).at(0);
      row_markers.push_back(std::count(dim_cell.begin(), dim_cell.end(), '*'));
      row.possible_values = Integers(cells[2]);
      row.kosniowski = Integers(cells[3]).at(0);
      row.hamiltonian = Integers(cells[4]).at(0);
      rows.push_back(std::move(row));
    } else if (line.rfind("\\*", 0) == 0) {
      size_t stars = 0;
      size_t i = 0;
      while (line.compare(i, 2, "\\*") == 0) {
        ++stars;
        i += 2;
      }
      // The prose before " are " holds the 0 of "c₁=0".
      const auto pos = line.find(" are ");
      if (pos == std::string::npos) ParseError("footnote: " + line);
      footnotes[stars] = Integers(line.substr(pos));
    }
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    if (row_markers[i] == 0) continue;
    auto it = footnotes.find(row_markers[i]);
    if (it == footnotes.end()) ParseError("missing footnote");
    rows[i].c1_zero_variant = it->second;
  }
  return rows;
}

}  // namespace circlefix::cli
