// Copyright 2026 The pirlab authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pirlab/render.h"

#include <algorithm>
#include <sstream>

namespace pirlab {

std::size_t display_width(const std::string& text) {
  return static_cast<std::size_t>(
      std::count_if(text.begin(), text.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
      }));
}

std::string render_cell(const Query& query) {
  if (query.empty()) return "∅";
  std::string out;
  for (const auto& comb : query) {
    if (!out.empty()) out += ", ";
    out += comb.to_alias_string();
  }
  return out;
}

std::string render_table(const StorageGraph& graph,
                         const std::vector<QueryPlan>& plans) {
  const int n = graph.n_servers();
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{""};
  for (int s = 1; s <= n; ++s) header.push_back("DB " + std::to_string(s));
  grid.push_back(header);
  for (const auto& plan : plans) {
    std::vector<std::string> row{"θ = " + std::to_string(plan.theta)};
    for (int s = 1; s <= n; ++s) row.push_back(render_cell(plan.at(s)));
    grid.push_back(std::move(row));
  }

  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], display_width(row[c]));
    }
  }

  std::ostringstream out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += " | ";
      line += row[c];
      line.append(width[c] - display_width(row[c]), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::vector<std::string> split_table_row(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = line.find(" | ", start);
    std::string cell = line.substr(
        start, bar == std::string::npos ? std::string::npos : bar - start);
    const auto b = cell.find_first_not_of(' ');
    const auto e = cell.find_last_not_of(' ');
    cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    if (bar == std::string::npos) break;
    start = bar + 3;
  }
  if (!cells.empty()) cells.erase(cells.begin());
  return cells;
}

}  // namespace pirlab
