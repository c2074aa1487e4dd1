#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "chg/core.hpp"

namespace chg {

/// The generator behind every randomised operation. Seeds are always
/// explicit; a uniform draw in [0,1) takes the top 53 bits of one output.
using Rng = std::mt19937_64;

double uniform01(Rng& rng);

/// Seed used for retry number `attempt` of a run started with `seed`
/// (attempt 0 uses the seed itself).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t attempt);

/// Each of 1..n independently with probability p. Requires 0 < p < 1.
IntegerSet bernoulli_sample(std::uint64_t n, double p, std::uint64_t seed);

/// Elements m of s that are the largest offset among g pairwise-disjoint
/// translates of some h-point shape inside s. Removing them leaves a weak
/// C_h[g] set. p.mode is ignored. Throws BudgetExhausted.
IntegerSet bad_elements(const IntegerSet& s, const Params& p, std::uint64_t budget = 1'000'000);

/// Elements that are the largest of g translate offsets of some shape,
/// disjoint or not. A superset of bad_elements whose removal leaves a strict
/// C_h[g] set.
IntegerSet strict_bad_elements(const IntegerSet& s, const Params& p);

struct DeletionTrace {
  std::uint64_t n = 0;
  Params params{2, 2, Mode::weak};
  double p = 0;
  IntegerSet sample;
  IntegerSet bad;
  IntegerSet result;
  /// |sample| >= np/2 and |bad| <= np/4.
  bool success = false;
  /// Seed of the trial this trace describes.
  std::uint64_t seed = 0;
  std::uint64_t attempts = 0;
  /// bad_elements ran out of budget and strict_bad_elements was used.
  bool strict_fallback = false;
};

/// Sample S with p = deletion_p(n,h,g), delete its bad elements and check
/// the size thresholds. Retries with fresh seeds (at most max_retries more
/// trials) until the thresholds hold; the last trace is returned either way.
DeletionTrace random_deletion(std::uint64_t n, const Params& p, std::uint64_t seed,
                              std::uint64_t max_retries = 0,
                              std::uint64_t budget = 1'000'000);

/// key=value record, one per line.
std::string format_trace(const DeletionTrace& t);

/// Scans 1..n keeping each m that preserves the property (strict or weak
/// per p.mode).
IntegerSet greedy(std::uint64_t n, const Params& p, std::uint64_t budget = 1'000'000);

/// {2qi + (i^2 mod q) : 0 <= i < q}, a Sidon set. Throws NotPrime.
IntegerSet sidon_erdos_turan(std::uint64_t q);

bool is_prime(std::uint64_t q);

}  // namespace chg
