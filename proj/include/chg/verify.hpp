#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "chg/core.hpp"

namespace chg {

enum class Verdict { holds, violated, undecided };

std::string to_string(Verdict v);

struct ViolationReport {
  Verdict verdict = Verdict::holds;
  std::vector<Witness> witnesses;
  std::uint64_t shapes_examined = 0;
  bool budget_exhausted = false;

  [[nodiscard]] bool holds() const noexcept { return verdict == Verdict::holds; }
  [[nodiscard]] bool decided() const noexcept { return verdict != Verdict::undecided; }
};

struct VerifyOptions {
  std::size_t max_witnesses = 16;
  /// Node budget for each independent-set search in weak mode.
  std::uint64_t budget = 1'000'000;
};

/// All k with shape + k inside a, ascending.
std::vector<Element> translate_offsets(const IntegerSet& a, const Shape& shape);

/// Calls visit(shape, offsets) for every h-point shape that has at least
/// min_offsets translates inside a, in lexicographic order of the deltas.
/// Stops early when visit returns false.
///
/// Shapes are grown one delta at a time; a prefix with fewer than
/// min_offsets translates is never extended, since adding a point can only
/// remove translates.
void for_each_repeated_shape(
    const IntegerSet& a, int h, std::size_t min_offsets,
    const std::function<bool(const Shape&, std::span<const Element>)>& visit);

/// Strict C_h[g] check. p.mode is ignored.
ViolationReport is_chg(const IntegerSet& a, const Params& p, const VerifyOptions& opts = {});

/// Weak C_h[g] check: looks for g pairwise-disjoint translates of one shape.
/// If a search runs out of budget and no witness is found elsewhere the
/// verdict is undecided.
ViolationReport is_weak_chg(const IntegerSet& a, const Params& p, const VerifyOptions& opts = {});

/// Dispatches on p.mode.
ViolationReport verify(const IntegerSet& a, const Params& p, const VerifyOptions& opts = {});

/// C_2[g] via difference multiplicities: every positive difference occurs
/// at most g-1 times.
bool is_c2g_fast(const IntegerSet& a, int g);

/// Reference oracle. Enumerates g-tuples of distinct h-subsets of a and
/// tests translation congruence (and disjointness in weak mode) directly.
/// Throws OracleTooLarge when C(|a|, h) exceeds kOracleSubsetCap.
bool brute_force_verify(const IntegerSet& a, const Params& p);
inline constexpr std::uint64_t kOracleSubsetCap = 20000;

/// True iff every translate of w lies in a, the offsets are distinct and
/// increasing, and (when w.disjoint) the translates are pairwise disjoint.
bool witness_is_valid(const IntegerSet& a, const Witness& w);

/// Would inserting x into a (assumed to satisfy p) break p? Only shapes
/// realised by h-subsets through x are inspected. Throws BudgetExhausted in
/// weak mode when a search gives up.
bool insertion_violates(const IntegerSet& a, Element x, const Params& p,
                        std::uint64_t budget = 1'000'000);

/// Incremental strict checker: keeps the number of h-subsets per shape.
class StrictShapeCounter {
 public:
  explicit StrictShapeCounter(Params p);

  /// Inserts x if the set stays C_h[g]; returns whether it did.
  bool try_insert(Element x);
  [[nodiscard]] const std::vector<Element>& elements() const noexcept { return elements_; }

 private:
  Params params_;
  std::vector<Element> elements_;
  std::unordered_map<Shape, std::uint32_t, ShapeHash> counts_;
};

}  // namespace chg
