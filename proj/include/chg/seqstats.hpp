#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chg/core.hpp"

namespace chg {

/// Number of elements <= x.
std::uint64_t counting_function(const IntegerSet& a, Element x);

/// Block counts of a over the N half-open blocks [(v-1)N, vN) that tile
/// [0, N^2), together with both sides of the class-count inequality
///   sum_v C(A_v, h) <= (g-1) C(N-1, h-1),
/// which every C_h[g] set satisfies.
struct BlockProfile {
  std::uint64_t N = 0;
  int h = 2;
  int g = 2;
  std::vector<std::uint64_t> counts;  // counts[v-1] = A_v
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  std::uint64_t power_sum = 0;  // sum_v A_v^h
};

/// Throws ElementOutOfRange if an element is >= N^2, InvalidArgument if
/// N < 2, Overflow if a sum leaves 64-bit range.
BlockProfile block_profile(const IntegerSet& a, std::uint64_t N, const Params& p);

/// `nu,count` rows, a blank line, then `N,h,g,lhs,rhs,power_sum` and its row.
std::string format_profile_csv(const BlockProfile& profile);

/// A(x) (log x)^{1/h} / x^{1-1/h}, natural log. Requires x >= 2.
double thm3_statistic(const IntegerSet& a, double x, int h);

/// Minimum of thm3_statistic over the sample points: an upper estimate of
/// inf_{n >= m} of the statistic. Every sample must lie in [m, max(a)].
/// Throws EmptySample.
double tau(const IntegerSet& a, std::uint64_t m, std::span<const std::uint64_t> sample_xs,
           int h = 2);

/// m, 2m, 4m, ... up to max(a), plus max(a) itself.
std::vector<std::uint64_t> geometric_samples(std::uint64_t m, std::uint64_t top);

}  // namespace chg
