#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "chg/core.hpp"

namespace chg {

struct SearchOptions {
  /// Wall-clock budget per table row; zero or negative means unlimited.
  std::chrono::duration<double> time_budget{0};
  /// Prune with thm1_rigorous on the unexplored interval (strict mode and
  /// g >= h only, where the bound applies).
  bool use_bound_pruning = true;
};

struct SearchResult {
  std::uint64_t size = 0;
  IntegerSet example;
  /// False when the time budget ran out before the search space was closed.
  bool optimal = true;
};

/// Largest subset of [1,n] that is C_h[g] (or weak C_h[g]). n <= 64.
/// Computes the whole table up to n, since each row warm-starts the next.
SearchResult max_chg(std::uint64_t n, const Params& p, const SearchOptions& opts = {});

struct TableRow {
  std::uint64_t n = 0;
  std::uint64_t size = 0;
  bool optimal = true;
  IntegerSet example;
};

/// Rows for n = 1..n_max. Sizes are non-decreasing in n.
std::vector<TableRow> extremal_table(std::uint64_t n_max, const Params& p,
                                     const SearchOptions& opts = {});

/// Header `n,size,optimal,example`, example space-separated.
std::string format_table_csv(const std::vector<TableRow>& rows);

inline constexpr std::uint64_t kMaxSearchN = 64;

}  // namespace chg
