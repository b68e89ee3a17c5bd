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

#include "bhcodes/code_builder.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <unordered_map>

#include "bhcodes/bounds_engine.hpp"
#include "key_hash.hpp"

namespace bhcodes {

namespace {

using Key = std::vector<std::uint32_t>;

void check_enumeration(const BhSequence& seq, std::uint32_t w, std::uint64_t budget) {
  require(seq.length() <= kMaxCodeLength, "code length above 64 is not supported");
  require(w <= seq.length(), "weight exceeds the sequence length");
  const BigCount words = binomial(static_cast<std::uint32_t>(seq.length()), w);
  if (words > budget) {
    throw BudgetExceeded("weight-" + std::to_string(w) + " enumeration",
                         words.fits_ulong_p() ? words.get_ui() : ~0ull, budget);
  }
}

// Visits every weight-w word in colexicographic order of its support, with
// phi of the word. Supports are built from the largest index down so that
// prefix products are shared.
template <class Visit>
void for_each_word(const BhSequence& seq, std::uint32_t w, Visit&& visit) {
  const auto n = static_cast<std::uint32_t>(seq.length());
  std::vector<GroupElement> prefix(std::size_t{w} + 1, seq.group.identity());
  auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t limit, Word mask) -> void {
    if (remaining == 0) {
      visit(mask, prefix[w]);
      return;
    }
    const std::uint32_t depth = w - remaining;
    for (std::uint32_t top = remaining - 1; top < limit; ++top) {
      prefix[depth + 1] = seq.group.mul(prefix[depth], seq.elements[top]);
      self(self, remaining - 1, top, mask | (Word{1} << top));
    }
  };
  rec(rec, w, n, 0);
}

struct LargestBucket {
  GroupElement element;
  std::vector<Word> words;
};

LargestBucket largest_bucket(const BhSequence& seq, std::uint32_t w) {
  std::unordered_map<Key, std::uint64_t, detail::KeyHash> counts;
  for_each_word(seq, w, [&](Word, const GroupElement& g) { ++counts[seq.group.key(g)]; });

  const Key* best = nullptr;
  std::uint64_t best_count = 0;
  for (const auto& [key, count] : counts) {
    if (count > best_count || (count == best_count && key < *best)) {
      best = &key;
      best_count = count;
    }
  }

  LargestBucket out{seq.group.identity(), {}};
  out.words.reserve(best_count);
  bool have_element = false;
  for_each_word(seq, w, [&](Word mask, const GroupElement& g) {
    if (seq.group.key(g) != *best) return;
    out.words.push_back(mask);
    if (!have_element) {
      out.element = g;
      have_element = true;
    }
  });
  return out;
}

}  // namespace

std::vector<Bucket> partition_weight_class(const BhSequence& seq, std::uint32_t w,
                                           std::uint64_t budget) {
  check_enumeration(seq, w, resolve_budget(budget));
  std::map<Key, Bucket> buckets;
  for_each_word(seq, w, [&](Word mask, const GroupElement& g) {
    auto key = seq.group.key(g);
    auto it = buckets.find(key);
    if (it == buckets.end()) it = buckets.emplace(std::move(key), Bucket{g, {}}).first;
    it->second.words.push_back(mask);
  });
  std::vector<Bucket> out;
  out.reserve(buckets.size());
  for (auto& [key, bucket] : buckets) out.push_back(std::move(bucket));
  return out;
}

CodeInstance build_constant_weight_code(const BhSequence& seq, std::uint32_t w,
                                        std::uint64_t budget) {
  check_enumeration(seq, w, resolve_budget(budget));
  LargestBucket bucket = largest_bucket(seq, w);

  CodeInstance code;
  code.n = static_cast<std::uint32_t>(seq.length());
  code.words = std::move(bucket.words);
  code.claimed_d = 2 * static_cast<std::uint32_t>(seq.h) + 2;
  code.claimed_w = w;
  code.bucket_elements.emplace_back(w, std::move(bucket.element));
  code.pigeonhole_floor = cw_bound_bc(code.n, w, seq.group_order());
  return code;
}

CodeInstance build_union_code(const BhSequence& seq, std::uint32_t u, std::uint64_t budget) {
  budget = resolve_budget(budget);
  const auto n = static_cast<std::uint32_t>(seq.length());
  const std::uint32_t d = 2 * static_cast<std::uint32_t>(seq.h) + 2;
  require(n <= kMaxCodeLength, "code length above 64 is not supported");
  require(u < d, "residue u must be below 2h+2");
  require(u <= n, "no weight in [0, n] is congruent to u");

  BigCount total = 0;
  for (std::uint32_t w = u; w <= n; w += d) total += binomial(n, w);
  if (total > budget) {
    throw BudgetExceeded("union enumeration", total.fits_ulong_p() ? total.get_ui() : ~0ull,
                         budget);
  }

  CodeInstance code;
  code.n = n;
  code.claimed_d = d;
  for (std::uint32_t w = u; w <= n; w += d) {
    LargestBucket bucket = largest_bucket(seq, w);
    code.words.insert(code.words.end(), bucket.words.begin(), bucket.words.end());
    code.bucket_elements.emplace_back(w, std::move(bucket.element));
    code.pigeonhole_floor += cw_bound_bc(n, w, seq.group_order());
  }
  return code;
}

DistanceResult min_distance(const CodeInstance& code, std::uint64_t word_budget) {
  if (code.words.size() > word_budget) {
    throw BudgetExceeded("pairwise distance check", code.words.size(), word_budget);
  }
  DistanceResult r;
  const auto& words = code.words;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const auto dist = static_cast<std::uint32_t>(std::popcount(words[i] ^ words[j]));
      if (!r.distance || dist < *r.distance) {
        r.distance = dist;
        r.closest_pair.emplace(i, j);
      }
    }
  }
  return r;
}

VerifyReport verify_code(CodeInstance& code, std::uint64_t word_budget) {
  VerifyReport report;
  code.verified = false;
  if (code.words.empty()) {
    report.reason = "code is empty";
    return report;
  }
  if (code.n > kMaxCodeLength) {
    report.reason = "code length above 64";
    return report;
  }
  for (std::size_t i = 0; i < code.words.size(); ++i) {
    const Word word = code.words[i];
    if (code.n < 64 && (word >> code.n) != 0) {
      report.reason = "word " + std::to_string(i) + " is longer than n";
      report.offending_word = i;
      return report;
    }
    if (code.claimed_w && static_cast<std::uint32_t>(std::popcount(word)) != *code.claimed_w) {
      report.reason = "word " + std::to_string(i) + " has weight " +
                      std::to_string(std::popcount(word)) + ", expected " +
                      std::to_string(*code.claimed_w);
      report.offending_word = i;
      return report;
    }
  }
  const DistanceResult dist = min_distance(code, word_budget);
  report.min_distance = dist.distance;
  if (dist.distance && (*dist.distance == 0 || *dist.distance < code.claimed_d)) {
    report.reason = "words " + std::to_string(dist.closest_pair->first) + " and " +
                    std::to_string(dist.closest_pair->second) + " are at distance " +
                    std::to_string(*dist.distance) + " < " + std::to_string(code.claimed_d);
    if (*dist.distance == 0) report.reason += " (duplicate)";
    report.offending_pair = dist.closest_pair;
    return report;
  }
  report.verified = true;
  code.verified = true;
  return report;
}

std::string word_to_string(Word word, std::uint32_t n) {
  std::string out(n, '0');
  for (std::uint32_t i = 0; i < n; ++i) {
    if ((word >> i) & 1u) out[i] = '1';
  }
  return out;
}

Word word_from_string(const std::string& bits) {
  require(bits.size() <= kMaxCodeLength, "word longer than 64");
  Word w = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    require(bits[i] == '0' || bits[i] == '1', "word characters must be 0 or 1");
    if (bits[i] == '1') w |= Word{1} << i;
  }
  return w;
}

std::string export_code(const CodeInstance& code) {
  std::string out = "# n=" + std::to_string(code.n) + " d=" + std::to_string(code.claimed_d) +
                    " w=" + (code.claimed_w ? std::to_string(*code.claimed_w) : "mixed") +
                    " size=" + std::to_string(code.words.size()) + "\n";
  for (Word word : code.words) {
    out += word_to_string(word, code.n);
    out += '\n';
  }
  return out;
}

CodeInstance parse_code(std::string_view text) {
  auto fail = [](const std::string& what) -> void { throw Error(ErrorCode::kParse, what); };
  CodeInstance code;
  std::size_t declared_size = 0;
  bool header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header) {
      char w[16] = {0};
      unsigned n = 0;
      unsigned d = 0;
      unsigned long size = 0;
      const std::string head(line);
      if (std::sscanf(head.c_str(), "# n=%u d=%u w=%15s size=%lu", &n, &d, w, &size) != 4) {
        fail("line 1: expected '# n=<n> d=<d> w=<w|mixed> size=<k>'");
      }
      if (n > kMaxCodeLength) fail("code length above 64 is not supported");
      code.n = n;
      code.claimed_d = d;
      if (std::string(w) != "mixed") {
        char* end = nullptr;
        const unsigned long weight = std::strtoul(w, &end, 10);
        if (end == w || *end != '\0') fail("line 1: bad weight field");
        code.claimed_w = static_cast<std::uint32_t>(weight);
      }
      declared_size = size;
      header = true;
      continue;
    }
    if (line.size() != code.n || line.find_first_not_of("01") != std::string_view::npos) {
      fail("line " + std::to_string(line_no) + ": expected a " + std::to_string(code.n) +
           "-character 0/1 word");
    }
    code.words.push_back(word_from_string(std::string(line)));
  }
  if (!header) fail("missing header line");
  if (code.words.size() != declared_size) {
    fail("header declares " + std::to_string(declared_size) + " words, found " +
         std::to_string(code.words.size()));
  }
  return code;
}

}  // namespace bhcodes
