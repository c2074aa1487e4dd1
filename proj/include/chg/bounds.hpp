#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace chg {

/// (g-1)^{1/h} n^{1-1/h}: the leading term of the upper bound for a C_h[g]
/// subset of [1,n]. Throws ParamOrder if h > g.
double thm1_leading(std::uint64_t n, int h, int g);

/// Largest a in [1,n] with
///   a^{h/(h-1)} <= (n + l) ((g-1)^{1/(h-1)} + (h-1) a^{1/(h-1)} / (l+1)),
/// minimised over l on a geometric grid in [1, 2n]. Every C_h[g] subset of
/// [1,n] satisfies the inequality at every l, so this bounds its size.
std::uint64_t thm1_rigorous(std::uint64_t n, int h, int g);

/// Largest feasible a in [1,n] for one fixed l. Exposed for testing.
std::uint64_t thm1_feasible_max(std::uint64_t n, int h, int g, std::uint64_t l);

/// The l values thm1_rigorous tries: 1, then growth by 1.05, then 2n.
std::vector<std::uint64_t> thm1_l_grid(std::uint64_t n);

/// (1-1/h)(1-1/g)(1+1/(hg-1)), computed as (h-1)(g-1)/(hg-1).
double thm2_exponent(int h, int g);

/// Sampling density p solving 2pn = n^{g+h-1} (2p)^{hg}, i.e.
/// p = n^{(2-g-h)/(hg-1)} / 2.
double deletion_p(std::uint64_t n, int h, int g);

struct OverlapSums {
  double sigma_m = 0;
  double sigma_1 = 0;
};

/// Sums of intersection probabilities under the uniform measure on
/// {0, ..., space_size-1}. Each event lists the points it contains.
OverlapSums overlap_sigma(std::uint64_t space_size,
                          std::span<const std::vector<std::uint64_t>> events, int m);

/// x(x-1)...(x-m+1)/m!
double falling_binomial(double x, int m);

}  // namespace chg
