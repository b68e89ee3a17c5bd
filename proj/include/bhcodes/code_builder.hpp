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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bhcodes/bose_chowla.hpp"
#include "bhcodes/error.hpp"

namespace bhcodes {

/// Binary word of length <= 64; bit i is coordinate i.
using Word = std::uint64_t;

inline constexpr std::uint32_t kMaxCodeLength = 64;

struct CodeInstance {
  std::uint32_t n = 0;
  std::vector<Word> words;
  std::uint32_t claimed_d = 1;
  std::optional<std::uint32_t> claimed_w;  // absent for mixed weights
  bool verified = false;
  /// The group element whose preimage was taken, one per weight class.
  std::vector<std::pair<std::uint32_t, GroupElement>> bucket_elements;
  /// Sum over the weight classes of ceil(C(n, w) / group order).
  mpz_class pigeonhole_floor = 0;
};

/// One preimage phi^{-1}(g) restricted to a weight class.
struct Bucket {
  GroupElement element;
  std::vector<Word> words;
};

/// Every nonempty bucket of the weight-w words, ordered by element key.
/// Refuses when C(n, w) exceeds the budget.
std::vector<Bucket> partition_weight_class(const BhSequence& seq, std::uint32_t w,
                                           std::uint64_t budget = 0);

/// The largest bucket of weight-w words (ties: least element key), with
/// claimed distance 2h+2.
CodeInstance build_constant_weight_code(const BhSequence& seq, std::uint32_t w,
                                        std::uint64_t budget = 0);

/// Union of the largest buckets over w == u (mod 2h+2). The budget applies
/// to the total number of enumerated words.
CodeInstance build_union_code(const BhSequence& seq, std::uint32_t u, std::uint64_t budget = 0);

struct DistanceResult {
  /// Absent when the code has fewer than two words.
  std::optional<std::uint32_t> distance;
  std::optional<std::pair<std::size_t, std::size_t>> closest_pair;
};

/// Exact pairwise minimum Hamming distance. Refuses above word_budget words.
DistanceResult min_distance(const CodeInstance& code,
                            std::uint64_t word_budget = kDefaultPairWordBudget);

struct VerifyReport {
  bool verified = false;
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
  std::optional<std::size_t> offending_word;
  std::optional<std::uint32_t> min_distance;
};

/// Checks distinctness, the weight claim and the distance claim; records the
/// outcome in code.verified.
VerifyReport verify_code(CodeInstance& code,
                         std::uint64_t word_budget = kDefaultPairWordBudget);

std::string word_to_string(Word word, std::uint32_t n);
Word word_from_string(const std::string& bits);

/// Header `# n=<n> d=<d> w=<w|mixed> size=<k>`, then one 0/1 line per word.
std::string export_code(const CodeInstance& code);

/// Inverse of export_code. Throws Error(kParse) on malformed input. The
/// result is unverified.
CodeInstance parse_code(std::string_view text);

}  // namespace bhcodes
