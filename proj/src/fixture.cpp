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

#include "bhcodes/fixture.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bhcodes/error.hpp"

namespace bhcodes {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? line.npos : tab - start));
    if (tab == std::string_view::npos) return out;
    start = tab + 1;
  }
}

bool parse_u32(std::string_view text, std::uint32_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

bool parse_fixed4(std::string_view text, std::int64_t& out) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const std::size_t dot = text.find('.');
  if (dot == std::string_view::npos || dot == 0 || text.size() - dot - 1 != 4) return false;
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  auto w = std::from_chars(text.data(), text.data() + dot, whole);
  auto f = std::from_chars(text.data() + dot + 1, text.data() + text.size(), frac);
  if (w.ec != std::errc() || w.ptr != text.data() + dot) return false;
  if (f.ec != std::errc() || f.ptr != text.data() + text.size()) return false;
  out = whole * 10000 + frac;
  if (negative) out = -out;
  return true;
}

std::string format_fixed4(std::int64_t value) {
  const bool negative = value < 0;
  const std::int64_t a = negative ? -value : value;
  std::string frac = std::to_string(a % 10000);
  frac.insert(0, 4 - frac.size(), '0');
  return (negative ? "-" : "") + std::to_string(a / 10000) + "." + frac;
}

FixtureParse parse_fixture(std::string_view text) {
  FixtureParse result;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = split_tabs(line);
    if (!header_seen && !cols.empty() && cols[0] == "n") {
      header_seen = true;
      if (cols.size() != 5 || cols[1] != "d" || cols[2] != "new" || cols[3] != "old" ||
          cols[4] != "ratio") {
        result.malformed.emplace_back(line_no, "unexpected header");
      }
      continue;
    }
    TableFixtureRow row;
    if (cols.size() != 5) {
      result.malformed.emplace_back(line_no, "expected 5 columns, got " + std::to_string(cols.size()));
      continue;
    }
    if (!parse_u32(cols[0], row.n) || !parse_u32(cols[1], row.d)) {
      result.malformed.emplace_back(line_no, "n and d must be positive integers");
      continue;
    }
    if (!parse_fixed4(cols[2], row.new_log2) || !parse_fixed4(cols[3], row.old_log2) ||
        !parse_fixed4(cols[4], row.ratio)) {
      result.malformed.emplace_back(line_no, "values must have exactly four decimals");
      continue;
    }
    result.rows.push_back(row);
  }
  return result;
}

FixtureParse load_fixture(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read fixture " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str());
}

bool ratio_consistent(const TableFixtureRow& row, double tolerance) {
  const double expected = std::exp2(static_cast<double>(row.new_log2 - row.old_log2) / 1e4);
  return std::fabs(static_cast<double>(row.ratio) / 1e4 - expected) <= tolerance;
}

}  // namespace bhcodes
