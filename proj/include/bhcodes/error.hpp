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
#include <stdexcept>
#include <string>

namespace bhcodes {

enum class ErrorCode {
  kInvalidArgument,
  kImpossible,   // no polynomial exists for the requested parameters
  kUnsupported,  // parameters outside what the constructions cover
  kBudgetExceeded,
  kParse,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown when an exhaustive enumeration would exceed its work budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required,
                 std::uint64_t budget)
      : Error(ErrorCode::kBudgetExceeded,
              what + ": needs " + std::to_string(required) +
                  " items, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw_invalid(what);
}

/// Enumeration budget used when a caller passes 0. Honors BH_BUDGET.
std::uint64_t default_budget();

inline std::uint64_t resolve_budget(std::uint64_t budget) {
  return budget == 0 ? default_budget() : budget;
}

// Word-count cap for exact pairwise distance checks.
inline constexpr std::uint64_t kDefaultPairWordBudget = 100000;

}  // namespace bhcodes
