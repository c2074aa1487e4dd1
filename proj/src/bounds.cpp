#include "chg/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "chg/core.hpp"
#include "combinatorics.hpp"

namespace chg {

namespace {

void check_hg(int h, int g) {
  if (h < 2 || g < 2) throw InvalidArgument("h and g must both be at least 2");
}

void check_order(std::uint64_t n, int h, int g) {
  check_hg(h, g);
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (h > g)
    throw ParamOrder("the bound assumes g >= h (got h=" + std::to_string(h) +
                     ", g=" + std::to_string(g) + "); swap them, C_h[g] = C_g[h]");
}

// Slack in favour of feasibility: a larger a only loosens the bound.
constexpr double kRelSlack = 1e-12;

bool feasible(double a, double n, int h, double l, double coef) {
  const double hm1 = h - 1;
  const double lhs = std::pow(a, h / hm1);
  const double rhs = (n + l) * (coef + hm1 * std::pow(a, 1.0 / hm1) / (l + 1));
  return lhs <= rhs * (1 + kRelSlack);
}

}  // namespace

double thm1_leading(std::uint64_t n, int h, int g) {
  check_order(n, h, g);
  return std::pow(static_cast<double>(g - 1), 1.0 / h) *
         std::pow(static_cast<double>(n), 1.0 - 1.0 / h);
}

std::vector<std::uint64_t> thm1_l_grid(std::uint64_t n) {
  std::vector<std::uint64_t> grid;
  const std::uint64_t top = 2 * n;
  for (std::uint64_t l = 1; l < top;) {
    grid.push_back(l);
    l = std::max(l + 1, static_cast<std::uint64_t>(std::floor(static_cast<double>(l) * 1.05)));
  }
  grid.push_back(top);
  return grid;
}

std::uint64_t thm1_feasible_max(std::uint64_t n, int h, int g, std::uint64_t l) {
  check_order(n, h, g);
  const double coef = std::pow(static_cast<double>(g - 1), 1.0 / (h - 1));
  const auto nd = static_cast<double>(n);
  const auto ld = static_cast<double>(l);
  // lhs - rhs is convex in a^{1/(h-1)} and negative at 0, so the feasible
  // a form an initial segment [1, a*].
  std::uint64_t lo = 1, hi = n;
  if (feasible(static_cast<double>(hi), nd, h, ld, coef)) return hi;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (feasible(static_cast<double>(mid), nd, h, ld, coef))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::uint64_t thm1_rigorous(std::uint64_t n, int h, int g) {
  check_order(n, h, g);
  std::uint64_t best = n;
  for (std::uint64_t l : thm1_l_grid(n)) best = std::min(best, thm1_feasible_max(n, h, g, l));
  return best;
}

double thm2_exponent(int h, int g) {
  check_hg(h, g);
  return static_cast<double>((h - 1) * (g - 1)) / static_cast<double>(h * g - 1);
}

double deletion_p(std::uint64_t n, int h, int g) {
  check_hg(h, g);
  if (n < 2) throw InvalidArgument("n must be at least 2");
  const double e = static_cast<double>(2 - g - h) / static_cast<double>(h * g - 1);
  return 0.5 * std::pow(static_cast<double>(n), e);
}

OverlapSums overlap_sigma(std::uint64_t space_size,
                          std::span<const std::vector<std::uint64_t>> events, int m) {
  if (space_size == 0) throw InvalidArgument("probability space must be non-empty");
  if (m < 1 || static_cast<std::size_t>(m) > events.size())
    throw InvalidArgument("m must lie in [1, number of events]");
  const std::size_t words = (space_size + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(events.size(),
                                                std::vector<std::uint64_t>(words, 0));
  for (std::size_t e = 0; e < events.size(); ++e)
    for (auto x : events[e]) {
      if (x >= space_size) throw InvalidArgument("event point outside the space");
      masks[e][x >> 6] |= std::uint64_t{1} << (x & 63);
    }

  OverlapSums out;
  const auto total = static_cast<double>(space_size);
  std::uint64_t singles = 0;
  for (const auto& mk : masks)
    for (auto w : mk) singles += static_cast<std::uint64_t>(std::popcount(w));
  out.sigma_1 = static_cast<double>(singles) / total;

  std::uint64_t hits = 0;
  std::vector<std::uint64_t> acc(words);
  detail::for_each_combination(
      events.size(), static_cast<std::size_t>(m), [&](std::span<const std::size_t> idx) {
        acc = masks[idx[0]];
        for (std::size_t t = 1; t < idx.size(); ++t)
          for (std::size_t w = 0; w < words; ++w) acc[w] &= masks[idx[t]][w];
        for (auto w : acc) hits += static_cast<std::uint64_t>(std::popcount(w));
        return true;
      });
  out.sigma_m = static_cast<double>(hits) / total;
  return out;
}

double falling_binomial(double x, int m) {
  double r = 1;
  for (int j = 0; j < m; ++j) r *= (x - j) / (j + 1);
  return r;
}

}  // namespace chg
