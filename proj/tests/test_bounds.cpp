#include <doctest.h>

#include <cmath>
#include <random>

#include "chg/bounds.hpp"
#include "chg/core.hpp"
#include "oracles.hpp"

using namespace chg;

namespace {

// Largest a in [1,n] satisfying the inequality at l, by linear scan.
std::uint64_t feasible_max_scan(std::uint64_t n, int h, int g, std::uint64_t l) {
  const double hm1 = h - 1;
  const double coef = std::pow(g - 1.0, 1.0 / hm1);
  std::uint64_t best = 1;
  for (std::uint64_t a = 1; a <= n; ++a) {
    const double ad = static_cast<double>(a);
    const double lhs = std::pow(ad, h / hm1);
    const double rhs = (static_cast<double>(n + l)) *
                       (coef + hm1 * std::pow(ad, 1.0 / hm1) / static_cast<double>(l + 1));
    if (lhs <= rhs * (1 + 1e-12)) best = a;
  }
  return best;
}

}  // namespace

TEST_CASE("leading term") {
  CHECK(thm1_leading(10000, 2, 2) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(thm1_leading(1000, 3, 3) == doctest::Approx(std::cbrt(2.0) * 100.0).epsilon(1e-12));
  CHECK(thm1_leading(100, 2, 5) == doctest::Approx(20.0).epsilon(1e-12));
  CHECK_THROWS_AS(thm1_leading(100, 3, 2), ParamOrder);
  CHECK_THROWS_AS(thm1_leading(100, 1, 2), InvalidArgument);
}

TEST_CASE("rigorous bound examples") {
  const auto v = thm1_rigorous(100, 2, 2);
  CHECK(v >= 10);
  CHECK(v <= 100);
  CHECK(thm1_rigorous(1, 2, 2) == 1);
  const auto big = thm1_rigorous(1'000'000, 2, 2);
  CHECK(big >= 1000);
  CHECK(big <= 1100);
  CHECK_THROWS_AS(thm1_rigorous(100, 4, 3), ParamOrder);
}

TEST_CASE("binary search matches a linear scan for each l") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 60; ++iter) {
    const std::uint64_t n = 1 + rng() % 400;
    const int h = 2 + static_cast<int>(rng() % 3);
    const int g = h + static_cast<int>(rng() % 3);
    for (std::uint64_t l : {std::uint64_t{1}, 1 + rng() % (2 * n), 2 * n})
      CHECK(thm1_feasible_max(n, h, g, l) == feasible_max_scan(n, h, g, l));
  }
}

TEST_CASE("l grid covers [1, 2n] geometrically") {
  for (std::uint64_t n : {1, 2, 10, 1000, 123457}) {
    const auto grid = thm1_l_grid(n);
    CHECK(grid.front() == 1);
    CHECK(grid.back() == 2 * n);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      CHECK(grid[i] > grid[i - 1]);
      CHECK(static_cast<double>(grid[i]) <= std::max(grid[i - 1] + 1.0, grid[i - 1] * 1.05) + 1e-9);
    }
  }
}

TEST_CASE("rigorous bound dominates exact Sidon maxima") {
  for (unsigned n = 1; n <= 14; ++n) {
    const auto exact = oracle::max_sidon_exhaustive(n);
    CHECK(thm1_rigorous(n, 2, 2) >= exact);
    // the inequality holds for the extremal size at every l
    for (auto l : thm1_l_grid(n)) CHECK(thm1_feasible_max(n, 2, 2, l) >= exact);
  }
}

TEST_CASE("rigorous bound is monotone in n and g") {
  for (int h = 2; h <= 3; ++h)
    for (int g = h; g <= 5; ++g) {
      std::uint64_t prev = 0;
      for (std::uint64_t n = 1; n <= 300; n += 7) {
        const auto v = thm1_rigorous(n, h, g);
        CHECK(v <= n);
        CHECK(v + 1 >= prev);  // one-unit tolerance for grid effects
        prev = v;
        CHECK(thm1_rigorous(n, h, g + 1) + 1 >= v);
      }
    }
}

TEST_CASE("exponent of the random construction") {
  CHECK(thm2_exponent(2, 2) == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(thm2_exponent(3, 3) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(thm2_exponent(2, 1000) == doctest::Approx(999.0 / 1999).epsilon(1e-12));
  for (int h = 2; h <= 20; ++h)
    for (int g = 2; g <= 20; ++g) {
      const double e = thm2_exponent(h, g);
      const double product = (1 - 1.0 / h) * (1 - 1.0 / g) * (1 + 1.0 / (h * g - 1));
      CHECK(e == doctest::Approx(product).epsilon(1e-12));
      CHECK(e == thm2_exponent(g, h));
      CHECK(e > 0);
      CHECK(e < 1);
    }
}

TEST_CASE("deletion density solves its defining equation") {
  CHECK(deletion_p(1'000'000, 2, 2) == doctest::Approx(5e-5).epsilon(1e-9));
  CHECK(deletion_p(1'000'000, 2, 2) * 1e6 == doctest::Approx(50).epsilon(1e-9));
  CHECK(deletion_p(100'000, 2, 3) == doctest::Approx(5e-4).epsilon(1e-9));
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    const std::uint64_t n = 2 + rng() % 10'000'000;
    const int h = 2 + static_cast<int>(rng() % 4), g = 2 + static_cast<int>(rng() % 4);
    const double p = deletion_p(n, h, g), nd = static_cast<double>(n);
    // compare logs: log(2pn) = (g+h-1) log n + hg log(2p)
    const double lhs = std::log(2 * p * nd);
    const double rhs = (g + h - 1) * std::log(nd) + h * g * std::log(2 * p);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
  CHECK_THROWS_AS(deletion_p(1, 2, 2), InvalidArgument);
}

TEST_CASE("overlap sums") {
  const std::vector<std::vector<std::uint64_t>> same{{0}, {0}};
  auto s = overlap_sigma(2, same, 2);
  CHECK(s.sigma_m == doctest::Approx(0.5));
  CHECK(s.sigma_1 == doctest::Approx(1.0));

  std::vector<std::vector<std::uint64_t>> bits(4);
  for (std::uint64_t x = 0; x < 16; ++x)
    for (int j = 0; j < 4; ++j)
      if (x >> j & 1U) bits[j].push_back(x);
  s = overlap_sigma(16, bits, 2);
  CHECK(s.sigma_m == doctest::Approx(1.5));
  CHECK(s.sigma_1 == doctest::Approx(2.0));
  CHECK(s.sigma_m >= falling_binomial(s.sigma_1, 2));

  const std::vector<std::vector<std::uint64_t>> one{{1, 3, 4}};
  s = overlap_sigma(8, one, 1);
  CHECK(s.sigma_m == doctest::Approx(s.sigma_1));

  CHECK_THROWS_AS(overlap_sigma(0, one, 1), InvalidArgument);
  CHECK_THROWS_AS(overlap_sigma(8, one, 2), InvalidArgument);
  const std::vector<std::vector<std::uint64_t>> outside{{9}};
  CHECK_THROWS_AS(overlap_sigma(8, outside, 1), InvalidArgument);
}

TEST_CASE("overlap sums equal the expected binomial of the hit count") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    const std::uint64_t space = 1 + rng() % 100;
    const std::size_t k = 1 + rng() % 6;
    std::vector<std::vector<std::uint64_t>> events(k);
    for (auto& e : events)
      for (std::uint64_t x = 0; x < space; ++x)
        if (rng() % 3 == 0) e.push_back(x);
    const int m = 1 + static_cast<int>(rng() % k);
    const auto s = overlap_sigma(space, events, m);
    CHECK(s.sigma_m == doctest::Approx(oracle::sigma_by_counts(space, events, m)).epsilon(1e-12));
    CHECK(s.sigma_1 == doctest::Approx(oracle::sigma_by_counts(space, events, 1)).epsilon(1e-12));
  }
}

TEST_CASE("falling binomial") {
  CHECK(falling_binomial(5, 2) == doctest::Approx(10));
  CHECK(falling_binomial(1, 2) == doctest::Approx(0));
  CHECK(falling_binomial(2.5, 2) == doctest::Approx(1.875));
  CHECK(falling_binomial(7, 0) == doctest::Approx(1));
}
