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

// Command-line front end. Links only against the C interface.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bhcodes/bhcodes.h"

#ifndef BHCODES_DEFAULT_FIXTURE
#define BHCODES_DEFAULT_FIXTURE "data/table_improved_bounds.tsv"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Table cells within this many 10^-4 units of the published value match.
constexpr long kMatchToleranceE4 = 20;

struct BoundDeleter {
  void operator()(bh_bound* b) const { bh_bound_free(b); }
};
struct MuDeleter {
  void operator()(bh_mu* m) const { bh_mu_free(m); }
};
struct SequenceDeleter {
  void operator()(bh_sequence* s) const { bh_sequence_free(s); }
};
struct CodeDeleter {
  void operator()(bh_code* c) const { bh_code_free(c); }
};
struct FixtureDeleter {
  void operator()(bh_fixture* f) const { bh_fixture_free(f); }
};
struct StringDeleter {
  void operator()(char* s) const { bh_string_free(s); }
};

using BoundPtr = std::unique_ptr<bh_bound, BoundDeleter>;
using MuPtr = std::unique_ptr<bh_mu, MuDeleter>;
using SequencePtr = std::unique_ptr<bh_sequence, SequenceDeleter>;
using CodePtr = std::unique_ptr<bh_code, CodeDeleter>;
using FixturePtr = std::unique_ptr<bh_fixture, FixtureDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

/// Reports a failed call and maps its status to an exit code.
int fail(bh_status status, const std::string& context) {
  std::cerr << "error: " << context << ": " << bh_last_error() << "\n";
  switch (status) {
    case BH_ERR_BUDGET:
      std::cerr << "budget exceeded (budget " << bh_last_budget()
                << "; raise it with --budget or BH_BUDGET)\n";
      return kExitBudget;
    case BH_ERR_INTERNAL:
      return kExitVerifyFailed;
    default:
      return kExitUsage;
  }
}

std::string fixed4(long long e4) {
  const bool negative = e4 < 0;
  const long long a = negative ? -e4 : e4;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%lld.%04lld", negative ? "-" : "", a / 10000, a % 10000);
  return buf;
}

long long parse_fixed4(const std::string& s) {
  const bool negative = !s.empty() && s[0] == '-';
  const std::string body = negative ? s.substr(1) : s;
  const auto dot = body.find('.');
  const long long whole = std::stoll(body.substr(0, dot));
  const long long frac = std::stoll(body.substr(dot + 1));
  const long long v = whole * 10000 + frac;
  return negative ? -v : v;
}

class Table {
 public:
  explicit Table(std::string format) : sep_(format == "csv" ? ',' : '\t') {}

  void row(const std::vector<std::string>& cells) const {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) std::cout << sep_;
      std::cout << cells[i];
    }
    std::cout << '\n';
  }

 private:
  char sep_;
};

struct FixtureIndex {
  std::vector<bh_fixture_row> rows;

  const bh_fixture_row* find(uint32_t n, uint32_t d) const {
    for (const auto& r : rows) {
      if (r.n == n && r.d == d) return &r;
    }
    return nullptr;
  }
};

std::optional<FixtureIndex> load_fixture_rows(const std::string& path, int& exit_code,
                                              bool report_malformed) {
  bh_fixture* raw = nullptr;
  const bh_status st = bh_fixture_load(path.c_str(), &raw);
  if (st != BH_OK) {
    exit_code = fail(st, "loading fixture " + path);
    return std::nullopt;
  }
  FixturePtr fixture(raw);
  FixtureIndex index;
  for (std::size_t i = 0; i < bh_fixture_row_count(fixture.get()); ++i) {
    bh_fixture_row row{};
    bh_fixture_row_at(fixture.get(), i, &row);
    index.rows.push_back(row);
  }
  const std::size_t malformed = bh_fixture_malformed_count(fixture.get());
  if (report_malformed) {
    for (std::size_t i = 0; i < malformed; ++i) {
      std::size_t line = 0;
      const char* reason = nullptr;
      bh_fixture_malformed_at(fixture.get(), i, &line, &reason);
      std::cerr << "malformed fixture line " << line << ": " << reason << "\n";
    }
  }
  if (index.rows.empty() && malformed > 0) {
    std::cerr << "error: fixture " << path << " has no parseable rows\n";
    exit_code = kExitUsage;
    return std::nullopt;
  }
  return index;
}

/// Runs `work(i)` for i in [0, count) on up to `jobs` threads.
template <class Work>
void parallel_for(std::size_t count, unsigned jobs, Work&& work) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) work(i);
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
}

struct CellResult {
  bh_status status = BH_OK;
  std::string error;
  BoundPtr bound;
};

CellResult compute_cell(uint32_t n, uint32_t d, bh_policy policy) {
  CellResult r;
  bh_bound* raw = nullptr;
  r.status = bh_bound_compute(n, d, policy, &raw);
  if (r.status != BH_OK) {
    r.error = bh_last_error();
  } else {
    r.bound.reset(raw);
  }
  return r;
}

std::pair<int, int> method_counts(const bh_bound* b) {
  int bc = 0;
  int gv = 0;
  for (std::size_t i = 0; i < bh_bound_weight_count(b); ++i) {
    bh_weight_info info{};
    bh_bound_weight(b, i, &info);
    (info.method == BH_METHOD_BC ? bc : gv)++;
  }
  return {bc, gv};
}

const char* route_name(const bh_bound* b) {
  if (bh_bound_degenerate(b)) return "-";
  return bh_bound_c_route(b) == BH_ROUTE_SHIFTED ? "shifted" : "direct";
}

// ---------------------------------------------------------------------------

struct TableArgs {
  uint32_t nmin = 1;
  uint32_t nmax = 512;
  uint32_t dmin = 3;
  uint32_t dmax = 29;
  std::string policy = "best";
  std::string format = "tsv";
  std::string fixture;
  bool force = false;
  bool timestamp = false;
  unsigned jobs = 0;
};

int cmd_table(const TableArgs& a) {
  if (a.nmin < 1 || a.dmin < 3) {
    std::cerr << "error: need nmin >= 1 and dmin >= 3\n";
    return kExitUsage;
  }
  if (!a.force && (a.nmax > 512 || a.dmax > 29)) {
    std::cerr << "error: nmax <= 512 and dmax <= 29 unless --force\n";
    return kExitUsage;
  }
  std::optional<FixtureIndex> fixture;
  if (!a.fixture.empty()) {
    int code = 0;
    fixture = load_fixture_rows(a.fixture, code, false);
    if (!fixture) return code;
  }

  std::vector<std::pair<uint32_t, uint32_t>> cells;
  for (uint32_t d = a.dmin; d <= a.dmax; ++d) {
    for (uint32_t n = a.nmin; n <= a.nmax; ++n) cells.emplace_back(n, d);
  }
  const bh_policy policy = a.policy == "fixed" ? BH_POLICY_FIXED : BH_POLICY_BEST;
  std::vector<CellResult> results(cells.size());
  parallel_for(cells.size(), a.jobs, [&](std::size_t i) {
    results[i] = compute_cell(cells[i].first, cells[i].second, policy);
  });

  Table out(a.format);
  if (a.timestamp) {
    const std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    std::cout << "# generated " << buf << "\n";
  }
  std::vector<std::string> header = {"n", "d", "new", "u", "c", "route", "q", "bc_classes",
                                     "gv_classes"};
  if (fixture) {
    header.insert(header.end(), {"old", "ratio"});
  }
  out.row(header);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& r = results[i];
    if (r.status != BH_OK) {
      std::cerr << "error: n=" << cells[i].first << " d=" << cells[i].second << ": " << r.error
                << "\n";
      return r.status == BH_ERR_BUDGET ? kExitBudget : kExitUsage;
    }
    const bh_bound* b = r.bound.get();
    const auto [bc, gv] = method_counts(b);
    std::vector<std::string> row = {std::to_string(bh_bound_n(b)),
                                    std::to_string(bh_bound_d(b)),
                                    bh_bound_log2(b),
                                    std::to_string(bh_bound_u(b)),
                                    bh_bound_degenerate(b) ? "-" : bh_bound_c_value(b),
                                    route_name(b),
                                    std::to_string(bh_bound_c_q(b)),
                                    std::to_string(bc),
                                    std::to_string(gv)};
    if (fixture) {
      if (const bh_fixture_row* fr = fixture->find(bh_bound_n(b), bh_bound_d(b))) {
        const long long now_e4 = parse_fixed4(bh_bound_log2(b));
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.4f",
                      std::exp2(static_cast<double>(now_e4 - fr->old_log2_e4) / 1e4));
        row.push_back(fixed4(fr->old_log2_e4));
        row.push_back(ratio);
      } else {
        row.insert(row.end(), {"", ""});
      }
    }
    out.row(row);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_bound(uint32_t n, uint32_t d, const std::string& policy, bool explain,
              const std::string& format) {
  bh_bound* raw = nullptr;
  const bh_status st =
      bh_bound_compute(n, d, policy == "fixed" ? BH_POLICY_FIXED : BH_POLICY_BEST, &raw);
  if (st != BH_OK) return fail(st, "bound");
  BoundPtr b(raw);
  Table out(format);
  out.row({"n", "d", "new", "u", "policy", "c", "route", "q", "lower_bound"});
  out.row({std::to_string(n), std::to_string(d), bh_bound_log2(b.get()),
           std::to_string(bh_bound_u(b.get())), policy,
           bh_bound_degenerate(b.get()) ? "-" : bh_bound_c_value(b.get()), route_name(b.get()),
           std::to_string(bh_bound_c_q(b.get())), bh_bound_value(b.get())});
  if (explain) {
    std::cout << "\n";
    if (bh_bound_degenerate(b.get())) {
      std::cout << "# d > n: a single codeword is optimal\n";
      return kExitOk;
    }
    std::cout << "# weight classes of A(" << bh_bound_even_n(b.get()) << ","
              << bh_bound_even_d(b.get()) << ") with w = " << bh_bound_u(b.get()) << " mod "
              << bh_bound_even_d(b.get()) << "\n";
    out.row({"w", "bc", "gv", "best", "method"});
    for (std::size_t i = 0; i < bh_bound_weight_count(b.get()); ++i) {
      bh_weight_info info{};
      bh_bound_weight(b.get(), i, &info);
      out.row({std::to_string(info.w), info.bc_value, info.gv_value, info.best,
               info.method == BH_METHOD_BC ? "BC" : "GV"});
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  uint32_t n = 0;
  uint32_t h = 0;
  std::optional<uint32_t> w;
  std::optional<uint32_t> union_u;
  std::string out;
  uint64_t budget = 0;
};

int cmd_construct(const ConstructArgs& a) {
  if (a.w.has_value() == a.union_u.has_value()) {
    std::cerr << "error: give either a weight w or --union u\n";
    return kExitUsage;
  }
  bh_sequence* raw_seq = nullptr;
  bh_status st = bh_sequence_choose(a.n, a.h, &raw_seq);
  if (st != BH_OK) return fail(st, "building the sequence");
  SequencePtr seq(raw_seq);

  bh_code* raw_code = nullptr;
  st = a.w ? bh_code_constant_weight(seq.get(), *a.w, a.budget, &raw_code)
           : bh_code_union(seq.get(), *a.union_u, a.budget, &raw_code);
  if (st != BH_OK) return fail(st, "building the code");
  CodePtr code(raw_code);

  int verified = 0;
  int32_t dmin = -1;
  char* raw_reason = nullptr;
  st = bh_code_verify(code.get(), 0, &verified, &dmin, &raw_reason);
  if (st != BH_OK) return fail(st, "verifying the code");
  StringPtr reason(raw_reason);

  char* raw_text = nullptr;
  st = bh_code_export(code.get(), &raw_text);
  if (st != BH_OK) return fail(st, "exporting the code");
  StringPtr text(raw_text);

  std::ostream& info = a.out.empty() ? std::cerr : std::cout;
  info << "sequence: q=" << bh_sequence_q(seq.get())
       << " mode=" << (bh_sequence_mode(seq.get()) == BH_MODE_A ? "a" : "b")
       << " modulus=" << bh_sequence_modulus(seq.get())
       << " group_order=" << bh_sequence_group_order(seq.get()) << "\n";
  info << "size: " << bh_code_size(code.get()) << "\n";
  info << "pigeonhole_floor: " << bh_code_pigeonhole_floor(code.get()) << "\n";
  info << "claimed_d: " << bh_code_claimed_d(code.get()) << "\n";
  info << "min_distance: " << (dmin < 0 ? std::string("inf") : std::to_string(dmin)) << "\n";
  info << "verified: " << (verified ? "yes" : "no") << "\n";
  if (reason) info << "reason: " << reason.get() << "\n";

  if (a.out.empty()) {
    std::cout << text.get();
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!(f << text.get())) {
      std::cerr << "error: cannot write " << a.out << "\n";
      return kExitUsage;
    }
  }
  return verified ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------

int cmd_verify_bh(uint32_t q, uint32_t h, uint32_t n, const std::string& mode, uint64_t budget) {
  const bool mode_b = mode == "b";
  if (mode_b && n < 2) {
    std::cerr << "error: mode b needs n >= 2 (class(1) plus at least one point)\n";
    return kExitUsage;
  }
  bh_sequence* raw = nullptr;
  bh_status st = bh_sequence_build(q, h, mode_b ? n - 1 : n, mode_b ? BH_MODE_B : BH_MODE_A, &raw);
  if (st != BH_OK) return fail(st, "building the sequence");
  SequencePtr seq(raw);

  int ok = 0;
  uint64_t multisets = 0;
  char* raw_cex = nullptr;
  st = bh_sequence_verify(seq.get(), budget, &ok, &multisets, &raw_cex);
  if (st != BH_OK) return fail(st, "verifying");
  StringPtr cex(raw_cex);

  std::cout << (ok ? "PASS" : "FAIL") << " q=" << q << " h=" << h
            << " n=" << bh_sequence_length(seq.get()) << " mode=" << (mode_b ? "b" : "a")
            << " group_order=" << bh_sequence_group_order(seq.get())
            << " multisets=" << multisets << "\n";
  std::cout << "modulus: " << bh_sequence_modulus(seq.get()) << "\n";
  for (std::size_t i = 0; i < bh_sequence_length(seq.get()); ++i) {
    std::cout << "g" << i + 1 << ": " << bh_sequence_element(seq.get(), i) << "\n";
  }
  if (cex) std::cout << "counterexample: " << cex.get() << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------

int cmd_mu(uint32_t q, uint32_t n, uint32_t h, bool brute, uint64_t budget) {
  bh_mu* raw = nullptr;
  bh_status st = bh_mu_closed_form(q, n, h, &raw);
  if (st == BH_ERR_IMPOSSIBLE) {
    std::cout << "mu(" << q << "," << n << "," << h << ") = IMPOSSIBLE\n";
    std::cout << "case: IMPOSSIBLE\n";
    std::cout << "reason: " << bh_last_error() << "\n";
    return kExitOk;
  }
  if (st != BH_OK) return fail(st, "mu");
  MuPtr closed(raw);
  std::cout << "mu(" << q << "," << n << "," << h << ") = " << bh_mu_value(closed.get()) << "\n";
  std::cout << "case: " << bh_mu_case(closed.get()) << "\n";

  if (q <= 65536) {
    bh_mu* raw_built = nullptr;
    if (bh_mu_construct(q, n, h, &raw_built) == BH_OK) {
      MuPtr built(raw_built);
      std::cout << "witness: " << bh_mu_witness(built.get()) << "\n";
      if (std::string(bh_mu_value(built.get())) != bh_mu_value(closed.get())) {
        std::cout << "construct: MISMATCH " << bh_mu_value(built.get()) << "\n";
        return kExitVerifyFailed;
      }
    }
  }
  if (brute) {
    bh_mu* raw_brute = nullptr;
    st = bh_mu_brute_force(q, n, h, budget, &raw_brute);
    if (st != BH_OK) return fail(st, "brute force");
    MuPtr b(raw_brute);
    const bool agree = std::string(bh_mu_value(b.get())) == bh_mu_value(closed.get());
    std::cout << "brute_force: " << bh_mu_value(b.get()) << " witness " << bh_mu_witness(b.get())
              << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
    if (!agree) return kExitVerifyFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_compare(const std::string& path, const std::string& format, unsigned jobs) {
  int code = 0;
  auto fixture = load_fixture_rows(path, code, true);
  if (!fixture) return code;
  const auto& rows = fixture->rows;

  std::vector<CellResult> fixed(rows.size());
  std::vector<CellResult> best(rows.size());
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    fixed[i] = compute_cell(rows[i].n, rows[i].d, BH_POLICY_FIXED);
    best[i] = compute_cell(rows[i].n, rows[i].d, BH_POLICY_BEST);
  });

  Table out(format);
  out.row({"n", "d", "fixture", "fixed_u", "best_u", "fixed_match", "best_match", "status",
           "ratio_ok"});
  std::size_t matched = 0;
  std::size_t improved = 0;
  std::size_t mismatched = 0;
  std::size_t ratio_bad = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bh_fixture_row& r = rows[i];
    if (fixed[i].status != BH_OK || best[i].status != BH_OK) {
      std::cerr << "error: n=" << r.n << " d=" << r.d << ": "
                << (fixed[i].status != BH_OK ? fixed[i].error : best[i].error) << "\n";
      ++mismatched;
      continue;
    }
    const long long f = parse_fixed4(bh_bound_log2(fixed[i].bound.get()));
    const long long b = parse_fixed4(bh_bound_log2(best[i].bound.get()));
    const bool fixed_ok = std::llabs(f - r.new_log2_e4) <= kMatchToleranceE4;
    const bool best_ok = std::llabs(b - r.new_log2_e4) <= kMatchToleranceE4;
    const bool ratio_ok = bh_fixture_ratio_consistent(&r, 0.0005) != 0;
    std::string status;
    if (fixed_ok || best_ok) {
      status = "MATCH";
      ++matched;
    } else if (std::max(f, b) > r.new_log2_e4) {
      status = "IMPROVED";
      ++improved;
    } else {
      status = "MISMATCH";
      ++mismatched;
    }
    if (!ratio_ok) ++ratio_bad;
    out.row({std::to_string(r.n), std::to_string(r.d), fixed4(r.new_log2_e4), fixed4(f),
             fixed4(b), fixed_ok ? "yes" : "no", best_ok ? "yes" : "no", status,
             ratio_ok ? "yes" : "no"});
  }
  std::cout << "# rows=" << rows.size() << " matched=" << matched << " improved=" << improved
            << " mismatched=" << mismatched << " ratio_inconsistent=" << ratio_bad << "\n";
  return mismatched == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"B_h-sequence constructions and lower bounds for binary codes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bh_version()));

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Lower bounds on log2 A(n,d) over a grid");
  table_cmd->add_option("--nmin", table.nmin, "Smallest length")->capture_default_str();
  table_cmd->add_option("--nmax", table.nmax, "Largest length")->capture_default_str();
  table_cmd->add_option("--dmin", table.dmin, "Smallest distance")->capture_default_str();
  table_cmd->add_option("--dmax", table.dmax, "Largest distance")->capture_default_str();
  table_cmd->add_option("--policy", table.policy, "Residue policy")
      ->check(CLI::IsMember({"best", "fixed"}))
      ->capture_default_str();
  table_cmd->add_option("--format", table.format, "Output format")
      ->check(CLI::IsMember({"tsv", "csv"}))
      ->capture_default_str();
  table_cmd->add_option("--fixture", table.fixture, "Published table (TSV) for old/ratio columns");
  table_cmd->add_flag("--force", table.force, "Lift the n <= 512, d <= 29 caps");
  table_cmd->add_flag("--timestamp", table.timestamp, "Prefix a generation timestamp");
  table_cmd->add_option("--jobs", table.jobs, "Worker threads (0 = all cores)");

  uint32_t bound_n = 0;
  uint32_t bound_d = 0;
  std::string bound_policy = "best";
  std::string bound_format = "tsv";
  bool explain = false;
  auto* bound_cmd = app.add_subcommand("bound", "Lower bound on A(n,d)");
  bound_cmd->add_option("n", bound_n, "Length")->required();
  bound_cmd->add_option("d", bound_d, "Minimum distance (>= 3)")->required();
  bound_cmd->add_option("--policy", bound_policy, "Residue policy")
      ->check(CLI::IsMember({"best", "fixed"}))
      ->capture_default_str();
  bound_cmd->add_option("--format", bound_format, "Output format")
      ->check(CLI::IsMember({"tsv", "csv"}))
      ->capture_default_str();
  bound_cmd->add_flag("--explain", explain, "Print every weight class");

  ConstructArgs construct;
  uint32_t construct_w = 0;
  uint32_t construct_u = 0;
  auto* construct_cmd = app.add_subcommand("construct", "Build and verify an explicit code");
  construct_cmd->set_help_flag("--help", "Print this help message and exit");
  construct_cmd->add_option("n", construct.n, "Length")->required();
  construct_cmd->add_option("h", construct.h, "Strength; distance is 2h+2")->required();
  auto* w_opt = construct_cmd->add_option("w", construct_w, "Constant weight");
  auto* u_opt = construct_cmd->add_option("--union", construct_u,
                                          "Union over weights congruent to u mod 2h+2");
  w_opt->excludes(u_opt);
  construct_cmd->add_option("--out", construct.out, "Write the code to this file");
  construct_cmd->add_option("--budget", construct.budget, "Enumeration budget (0 = default)");

  uint32_t vq = 0;
  uint32_t vh = 0;
  uint32_t vn = 0;
  std::string vmode = "a";
  uint64_t vbudget = 0;
  auto* verify_cmd = app.add_subcommand("verify-bh", "Construct a sequence and check B_h");
  verify_cmd->set_help_flag("--help", "Print this help message and exit");
  verify_cmd->add_option("q", vq, "Field order")->required();
  verify_cmd->add_option("h", vh, "Strength")->required();
  verify_cmd->add_option("n", vn, "Sequence length")->required();
  verify_cmd->add_option("--mode", vmode, "a: full unit group; b: modulo scalars")
      ->check(CLI::IsMember({"a", "b"}))
      ->capture_default_str();
  verify_cmd->add_option("--budget", vbudget, "Enumeration budget (0 = default)");

  uint32_t mq = 0;
  uint32_t mn = 0;
  uint32_t mh = 0;
  bool brute = false;
  uint64_t mbudget = 0;
  auto* mu_cmd = app.add_subcommand("mu", "Minimal unit count mu(q,n,h)");
  mu_cmd->set_help_flag("--help", "Print this help message and exit");
  mu_cmd->add_option("q", mq, "Field order")->required();
  mu_cmd->add_option("n", mn, "Number of points")->required();
  mu_cmd->add_option("h", mh, "Degree")->required();
  mu_cmd->add_flag("--brute", brute, "Also run the exhaustive oracle");
  mu_cmd->add_option("--budget", mbudget, "Enumeration budget (0 = default)");

  std::string fixture_path = BHCODES_DEFAULT_FIXTURE;
  std::string compare_format = "tsv";
  unsigned compare_jobs = 0;
  auto* compare_cmd = app.add_subcommand("compare", "Recompute every row of a published table");
  compare_cmd->add_option("--fixture", fixture_path, "Fixture TSV")->capture_default_str();
  compare_cmd->add_option("--format", compare_format, "Output format")
      ->check(CLI::IsMember({"tsv", "csv"}))
      ->capture_default_str();
  compare_cmd->add_option("--jobs", compare_jobs, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*table_cmd) return cmd_table(table);
  if (*bound_cmd) return cmd_bound(bound_n, bound_d, bound_policy, explain, bound_format);
  if (*construct_cmd) {
    if (w_opt->count() > 0) construct.w = construct_w;
    if (u_opt->count() > 0) construct.union_u = construct_u;
    return cmd_construct(construct);
  }
  if (*verify_cmd) return cmd_verify_bh(vq, vh, vn, vmode, vbudget);
  if (*mu_cmd) return cmd_mu(mq, mn, mh, brute, mbudget);
  if (*compare_cmd) return cmd_compare(fixture_path, compare_format, compare_jobs);
  return kExitUsage;
}
