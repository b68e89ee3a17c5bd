// Copyright 2026 The bhcodes Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bhcodes {

/// One published table cell: log2 lower bounds and their ratio, each with
/// four decimals. Decimals are kept as integers scaled by 10^4.
struct TableFixtureRow {
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::int64_t new_log2 = 0;
  std::int64_t old_log2 = 0;
  std::int64_t ratio = 0;
};

struct FixtureParse {
  std::vector<TableFixtureRow> rows;
  /// (1-based line number, reason)
  std::vector<std::pair<std::size_t, std::string>> malformed;
};

/// TSV with header `n	d	new	old	ratio`; blank lines and `#` comments are
/// skipped.
FixtureParse parse_fixture(std::string_view text);
/// Throws Error(kIo) when the file cannot be read.
FixtureParse load_fixture(const std::string& path);

/// "261.1513" -> 2611513. Exactly four decimals are accepted; returns false
/// otherwise.
bool parse_fixed4(std::string_view text, std::int64_t& out);
std::string format_fixed4(std::int64_t value);

/// |ratio - 2^(new - old)| <= tolerance.
bool ratio_consistent(const TableFixtureRow& row, double tolerance = 0.0005);

}  // namespace bhcodes
