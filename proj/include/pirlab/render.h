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

#pragma once

#include <string>
#include <vector>

#include "pirlab/graph.h"
#include "pirlab/plan.h"

namespace pirlab {

// "∅" for the null query, otherwise the letter-alias combs joined by ", ".
std::string render_cell(const Query& query);

// Rows theta, columns "DB n", pipe-separated and space-padded:
//
//          | DB 1 | DB 2  | DB 3 | DB 4
//   θ = 1  | a1   | a2+b1 | b1   | ∅
std::string render_table(const StorageGraph& graph,
                         const std::vector<QueryPlan>& plans);

// Inverse of render_table's row layout: the trimmed cells of one body line,
// without the row label.
std::vector<std::string> split_table_row(const std::string& line);

// Display width of UTF-8 text (code points).
std::size_t display_width(const std::string& text);

}  // namespace pirlab
