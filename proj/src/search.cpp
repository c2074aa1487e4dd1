#include "chg/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "chg/bounds.hpp"

namespace chg {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

// Element e lives in bit e-1.
constexpr Mask bit(std::uint64_t e) { return Mask{1} << (e - 1); }

struct Timeout {};

class RowSearch {
 public:
  RowSearch(std::uint64_t n, const Params& p, const std::vector<std::uint64_t>& ub,
            std::uint64_t incumbent, Mask incumbent_set, bool force_top,
            Clock::time_point deadline, bool timed)
      : n_(n), p_(p), ub_(ub), best_(incumbent), best_set_(incumbent_set),
        force_top_(force_top), deadline_(deadline), timed_(timed) {}

  // Returns false on timeout.
  bool run() {
    try {
      dfs(n_, 0, 0);
    } catch (const Timeout&) {
      return false;
    }
    return true;
  }

  [[nodiscard]] std::uint64_t best() const { return best_; }
  [[nodiscard]] Mask best_set() const { return best_set_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  void dfs(std::uint64_t e, Mask chosen, std::uint64_t count) {
    ++nodes_;
    if (timed_ && (nodes_ & 1023) == 0 && Clock::now() > deadline_) throw Timeout{};
    if (count > best_) {
      best_ = count;
      best_set_ = chosen;
    }
    if (e == 0) return;
    // everything lies in [1, max chosen]; the rest lies in [1, e]
    const std::uint64_t top = chosen ? 64 - static_cast<std::uint64_t>(std::countl_zero(chosen)) : e;
    if (std::min(count + ub_[e], ub_[top]) <= best_) return;

    if (!violates(chosen, e)) {
      stack_.push_back(e);
      dfs(e - 1, chosen | bit(e), count + 1);
      stack_.pop_back();
    }
    // a record-breaking set spans [1,n] when the previous row is exact
    if (force_top_ && (e == n_ || e == 1)) return;
    dfs(e - 1, chosen, count);
  }

  // Would adding x (smaller than every chosen element) break the property?
  // Shapes through x have x as their smallest point; their translate
  // offsets are the AND of shifted copies of the set.
  bool violates(Mask chosen, std::uint64_t x) {
    const auto h = static_cast<std::size_t>(p_.h);
    if (stack_.size() + 1 < h) return false;
    const Mask with = chosen | bit(x);
    return shape_through(x, with, 0, 0, with);
  }

  bool shape_through(std::uint64_t x, Mask with, std::size_t start, std::size_t depth,
                     Mask offsets) {
    const auto g = static_cast<int>(p_.g);
    if (depth + 1 == static_cast<std::size_t>(p_.h)) {
      if (p_.mode == Mode::strict) return true;
      return has_disjoint(offsets, x, std::span<const std::uint64_t>(deltas_.data(), depth));
    }
    for (std::size_t i = start; i < stack_.size(); ++i) {
      deltas_[depth] = stack_[i] - x;
      const Mask next = offsets & (with >> deltas_[depth]);
      // fewer than g translates now means fewer than g for any extension
      if (std::popcount(next) < g) continue;
      if (shape_through(x, with, i + 1, depth + 1, next)) return true;
    }
    return false;
  }

  // g pairwise-disjoint translates among `offsets`, one of them at x.
  bool has_disjoint(Mask offsets, std::uint64_t x, std::span<const std::uint64_t> deltas) const {
    std::vector<std::uint64_t> diffs(deltas.begin(), deltas.end());
    for (std::size_t i = 0; i < deltas.size(); ++i)
      for (std::size_t j = i + 1; j < deltas.size(); ++j)
        diffs.push_back(deltas[i] > deltas[j] ? deltas[i] - deltas[j] : deltas[j] - deltas[i]);
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    auto conflicts = [&](Mask b) {
      Mask c = b;
      for (auto d : diffs) c |= (b << d) | (b >> d);
      return c;
    };
    const auto need = static_cast<std::uint64_t>(p_.g) - 1;
    return pick(offsets & ~conflicts(bit(x)), need, conflicts);
  }

  template <class Conf>
  static bool pick(Mask cand, std::uint64_t need, const Conf& conflicts) {
    if (need == 0) return true;
    while (static_cast<std::uint64_t>(std::popcount(cand)) >= need) {
      const Mask v = cand & (~cand + 1);
      cand &= ~v;
      if (pick(cand & ~conflicts(v), need - 1, conflicts)) return true;
    }
    return false;
  }

  std::uint64_t n_;
  Params p_;
  const std::vector<std::uint64_t>& ub_;
  std::uint64_t best_;
  Mask best_set_;
  bool force_top_;
  Clock::time_point deadline_;
  bool timed_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> stack_;  // chosen elements, descending
  std::array<std::uint64_t, 64> deltas_{};
};

IntegerSet mask_to_set(Mask m, std::uint64_t n) {
  std::vector<Element> out;
  for (std::uint64_t e = 1; e <= n; ++e)
    if (m & bit(e)) out.push_back(e);
  return IntegerSet::from_sorted(std::move(out), n);
}

Mask set_to_mask(const IntegerSet& s) {
  Mask m = 0;
  for (Element e : s) m |= bit(e);
  return m;
}

}  // namespace

std::vector<TableRow> extremal_table(std::uint64_t n_max, const Params& p,
                                     const SearchOptions& opts) {
  p.validate();
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  if (n_max > kMaxSearchN)
    throw InvalidArgument("exact search supports n <= " + std::to_string(kMaxSearchN));

  const bool thm1_applies = opts.use_bound_pruning && p.mode == Mode::strict;
  const int lo = std::min(p.h, p.g), hi = std::max(p.h, p.g);  // C_h[g] = C_g[h]

  // ub[e]: upper bound for a valid subset of any e consecutive integers
  std::vector<std::uint64_t> ub(n_max + 1, 0);
  std::vector<TableRow> rows;
  TableRow prev{0, 0, true, IntegerSet{}};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    ub[n] = std::min(n, ub[n - 1] + 1);
    if (thm1_applies) ub[n] = std::min(ub[n], thm1_rigorous(n, lo, hi));

    const bool timed = opts.time_budget.count() > 0;
    const auto deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(opts.time_budget);
    // Anything beating the previous optimum spans all of [1,n], so n is in it.
    RowSearch search(n, p, ub, prev.size, set_to_mask(prev.example), prev.optimal, deadline,
                     timed);
    const bool closed = search.run();

    TableRow row;
    row.n = n;
    row.size = search.best();
    row.example = mask_to_set(search.best_set(), n);
    row.optimal = closed;
    if (row.optimal) ub[n] = row.size;
    rows.push_back(row);
    prev = row;
  }
  return rows;
}

SearchResult max_chg(std::uint64_t n, const Params& p, const SearchOptions& opts) {
  const auto rows = extremal_table(n, p, opts);
  const auto& last = rows.back();
  return SearchResult{last.size, last.example, last.optimal};
}

std::string format_table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream o;
  o << "n,size,optimal,example\n";
  for (const auto& r : rows) {
    o << r.n << ',' << r.size << ',' << (r.optimal ? "true" : "false") << ',';
    bool first = true;
    for (Element e : r.example) {
      if (!first) o << ' ';
      o << e;
      first = false;
    }
    o << '\n';
  }
  return o.str();
}

}  // namespace chg
