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

#include <set>

#include "bhcodes/error.hpp"
#include "bhcodes/fixture.hpp"
#include "doctest.h"

using namespace bhcodes;

TEST_CASE("fixed-point decimals") {
  std::int64_t v = 0;
  CHECK(parse_fixed4("261.1513", v));
  CHECK(v == 2611513);
  CHECK(parse_fixed4("-0.0001", v));
  CHECK(v == -1);
  CHECK_FALSE(parse_fixed4("1.151", v));
  CHECK_FALSE(parse_fixed4("1.15130", v));
  CHECK_FALSE(parse_fixed4("abc", v));
  CHECK_FALSE(parse_fixed4(".1513", v));
  CHECK(format_fixed4(2611513) == "261.1513");
  CHECK(format_fixed4(7) == "0.0007");
  CHECK(format_fixed4(-15850) == "-1.5850");
}

TEST_CASE("parse rows and report malformed lines") {
  const FixtureParse p = parse_fixture(
      "n\td\tnew\told\tratio\n"
      "# comment\n"
      "\n"
      "279\t5\t261.1513\t261.0000\t1.1106\n"
      "168\t9\t136.0752\t136.0000\t1.0535\n"
      "12\t5\toops\t1.0000\t1.0000\n"
      "1\t2\t3\n");
  REQUIRE(p.rows.size() == 2);
  CHECK(p.rows[0].n == 279);
  CHECK(p.rows[0].d == 5);
  CHECK(p.rows[0].new_log2 == 2611513);
  CHECK(p.rows[1].ratio == 10535);
  REQUIRE(p.malformed.size() == 2);
  CHECK(p.malformed[0].first == 6);
  CHECK(p.malformed[1].first == 7);
  for (const auto& r : p.rows) CHECK(ratio_consistent(r));

  CHECK(parse_fixture("").rows.empty());
  CHECK(parse_fixture("").malformed.empty());
  CHECK(parse_fixture("n\td\tnew\n").malformed.size() == 1);
  CHECK_THROWS_AS(load_fixture("/nonexistent/fixture.tsv"), Error);
}

TEST_CASE("ratio check detects inconsistency") {
  TableFixtureRow row{279, 5, 2611513, 2610000, 11106};
  CHECK(ratio_consistent(row));
  row.ratio = 11200;
  CHECK_FALSE(ratio_consistent(row));
}

TEST_CASE("shipped fixture") {
  const FixtureParse p = load_fixture(BHCODES_FIXTURE_PATH);
  CHECK(p.rows.size() == 1028);
  CHECK(p.malformed.empty());
  std::set<std::uint32_t> ds;
  std::set<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (const auto& r : p.rows) {
    ds.insert(r.d);
    cells.emplace(r.n, r.d);
    CHECK(ratio_consistent(r));
    CHECK(r.new_log2 > r.old_log2);
  }
  CHECK(cells.size() == p.rows.size());
  CHECK(ds == std::set<std::uint32_t>{5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29});
  for (auto cell : {std::pair{279u, 5u}, {150u, 11u}, {168u, 9u}, {289u, 17u}}) {
    CHECK(cells.count(cell) == 1);
  }
}
