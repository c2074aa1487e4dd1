#include "chg/independent_set.hpp"

#include <algorithm>
#include <bit>

namespace chg::detail {

std::size_t Bits::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Bits::next(std::size_t from) const noexcept {
  if (from >= n_) return n_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return std::min(n_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
    if (++wi >= words_.size()) return n_;
    w = words_[wi];
  }
}

void Bits::set_all() {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
}

void Bits::clear_from(std::size_t i) {
  if (i >= n_) return;
  std::size_t wi = i >> 6;
  words_[wi] &= (std::uint64_t{1} << (i & 63)) - 1;
  for (++wi; wi < words_.size(); ++wi) words_[wi] = 0;
}

Bits& Bits::and_not(const Bits& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ConflictGraph::ConflictGraph(std::span<const Element> offsets,
                             std::span<const Element> positive_diffs)
    : adj_(offsets.size(), Bits(offsets.size())) {
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    for (Element d : positive_diffs) {
      const Element target = offsets[i] + d;
      auto it = std::lower_bound(offsets.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                 offsets.end(), target);
      if (it != offsets.end() && *it == target) {
        const auto j = static_cast<std::size_t>(it - offsets.begin());
        adj_[i].set(j);
        adj_[j].set(i);
      }
    }
  }
}

namespace {

struct Searcher {
  const ConflictGraph& graph;
  std::size_t target;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<std::size_t> chosen;

  bool run(Bits candidates) {
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    if (chosen.size() == target) return true;
    std::size_t available = candidates.count();
    for (std::size_t v = candidates.next(0); v < candidates.size(); v = candidates.next(v + 1)) {
      if (chosen.size() + available < target) return false;
      Bits rest = candidates;
      rest.and_not(graph.neighbors(v));
      // earlier vertices were reset from candidates after their branch
      rest.reset(v);
      chosen.push_back(v);
      if (run(std::move(rest))) return true;
      chosen.pop_back();
      if (exhausted) return false;
      candidates.reset(v);
      --available;
    }
    return false;
  }
};

}  // namespace

IndependentSetResult find_independent_set(const ConflictGraph& graph, const Bits& candidates,
                                          std::size_t target, std::uint64_t budget) {
  IndependentSetResult result;
  if (target == 0) {
    result.status = SearchStatus::found;
    return result;
  }
  Searcher s{graph, target, budget, 0, false, {}};
  const bool ok = s.run(candidates);
  result.nodes = s.nodes;
  if (ok) {
    result.status = SearchStatus::found;
    result.vertices = std::move(s.chosen);
  } else {
    result.status = s.exhausted ? SearchStatus::budget_exhausted : SearchStatus::none;
  }
  return result;
}

}  // namespace chg::detail
