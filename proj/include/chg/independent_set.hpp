#pragma once

// Exact independent-set search on the conflict graph of a shape's translate
// offsets. Two offsets conflict when their translates share an element, i.e.
// when their difference is a difference of two points of the shape.

#include <cstdint>
#include <span>
#include <vector>

#include "chg/core.hpp"

namespace chg::detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  [[nodiscard]] std::size_t count() const noexcept;
  /// Index of the first set bit at or after `from`, or size() if none.
  [[nodiscard]] std::size_t next(std::size_t from) const noexcept;
  void set_all();
  /// Clears every bit at index >= i.
  void clear_from(std::size_t i);
  Bits& and_not(const Bits& other);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

class ConflictGraph {
 public:
  /// offsets sorted ascending; positive_diffs are the positive differences
  /// of the shape.
  ConflictGraph(std::span<const Element> offsets, std::span<const Element> positive_diffs);

  [[nodiscard]] std::size_t size() const noexcept { return adj_.size(); }
  [[nodiscard]] const Bits& neighbors(std::size_t v) const { return adj_[v]; }
  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }

 private:
  std::vector<Bits> adj_;
};

enum class SearchStatus { found, none, budget_exhausted };

struct IndependentSetResult {
  SearchStatus status = SearchStatus::none;
  std::vector<std::size_t> vertices;  // ascending, valid iff found
  std::uint64_t nodes = 0;
};

/// Looks for `target` pairwise non-adjacent vertices inside `candidates`.
/// Vertices are tried in ascending order, include-first, so the first set
/// found is the lexicographically smallest one. Gives up after `budget`
/// search nodes.
IndependentSetResult find_independent_set(const ConflictGraph& graph, const Bits& candidates,
                                          std::size_t target, std::uint64_t budget);

}  // namespace chg::detail
