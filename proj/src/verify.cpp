#include "chg/verify.hpp"

#include <algorithm>
#include <map>

#include "chg/independent_set.hpp"
#include "combinatorics.hpp"

namespace chg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

std::vector<Element> translate_offsets(const IntegerSet& a, const Shape& shape) {
  std::vector<Element> out;
  for (Element k : a) {
    bool inside = true;
    for (Element d : shape.deltas) {
      if (d > UINT64_MAX - k || !a.contains(k + d)) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(k);
  }
  return out;
}

namespace {

using Visit = std::function<bool(const Shape&, std::span<const Element>)>;

// Returns false when the visitor asked to stop.
bool grow_shapes(const std::vector<Element>& a, std::size_t h, std::size_t min_offsets,
                 Shape& shape, const std::vector<Element>& offsets, const Visit& visit) {
  if (shape.deltas.size() + 1 == h) return visit(shape, offsets);

  const Element last = shape.deltas.empty() ? 0 : shape.deltas.back();
  std::vector<std::pair<Element, Element>> candidates;  // (delta, offset)
  for (Element k : offsets) {
    auto it = std::upper_bound(a.begin(), a.end(), k + last);
    for (; it != a.end(); ++it) candidates.emplace_back(*it - k, k);
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<Element> next;
  for (std::size_t i = 0; i < candidates.size();) {
    std::size_t j = i;
    while (j < candidates.size() && candidates[j].first == candidates[i].first) ++j;
    if (j - i >= min_offsets) {
      next.clear();
      for (std::size_t t = i; t < j; ++t) next.push_back(candidates[t].second);
      shape.deltas.push_back(candidates[i].first);
      const bool go_on = grow_shapes(a, h, min_offsets, shape, next, visit);
      shape.deltas.pop_back();
      if (!go_on) return false;
    }
    i = j;
  }
  return true;
}

}  // namespace

void for_each_repeated_shape(const IntegerSet& a, int h, std::size_t min_offsets,
                             const Visit& visit) {
  if (h < 2) throw InvalidArgument("shape size h must be at least 2");
  if (min_offsets == 0) min_offsets = 1;
  if (a.size() < static_cast<std::size_t>(h) || a.size() < min_offsets) return;
  Shape shape;
  grow_shapes(a.vec(), static_cast<std::size_t>(h), min_offsets, shape, a.vec(), visit);
}

ViolationReport is_chg(const IntegerSet& a, const Params& p, const VerifyOptions& opts) {
  p.validate();
  ViolationReport report;
  const auto g = static_cast<std::size_t>(p.g);
  const std::size_t cap = std::max<std::size_t>(opts.max_witnesses, 1);
  for_each_repeated_shape(a, p.h, g, [&](const Shape& s, std::span<const Element> offsets) {
    ++report.shapes_examined;
    report.witnesses.push_back(
        Witness{s, std::vector<Element>(offsets.begin(), offsets.begin() + p.g), false});
    return report.witnesses.size() < cap;
  });
  report.verdict = report.witnesses.empty() ? Verdict::holds : Verdict::violated;
  if (opts.max_witnesses == 0) report.witnesses.clear();
  return report;
}

ViolationReport is_weak_chg(const IntegerSet& a, const Params& p, const VerifyOptions& opts) {
  p.validate();
  ViolationReport report;
  const auto g = static_cast<std::size_t>(p.g);
  const std::size_t cap = std::max<std::size_t>(opts.max_witnesses, 1);
  for_each_repeated_shape(a, p.h, g, [&](const Shape& s, std::span<const Element> offsets) {
    ++report.shapes_examined;
    const auto diffs = shape_positive_differences(s);
    const detail::ConflictGraph graph(offsets, diffs);
    detail::Bits all(offsets.size());
    all.set_all();
    const auto r = detail::find_independent_set(graph, all, g, opts.budget);
    if (r.status == detail::SearchStatus::budget_exhausted) {
      report.budget_exhausted = true;
    } else if (r.status == detail::SearchStatus::found) {
      Witness w{s, {}, true};
      for (auto v : r.vertices) w.offsets.push_back(offsets[v]);
      report.witnesses.push_back(std::move(w));
    }
    return report.witnesses.size() < cap;
  });
  if (!report.witnesses.empty())
    report.verdict = Verdict::violated;
  else
    report.verdict = report.budget_exhausted ? Verdict::undecided : Verdict::holds;
  if (opts.max_witnesses == 0) report.witnesses.clear();
  return report;
}

ViolationReport verify(const IntegerSet& a, const Params& p, const VerifyOptions& opts) {
  return p.mode == Mode::strict ? is_chg(a, p, opts) : is_weak_chg(a, p, opts);
}

bool is_c2g_fast(const IntegerSet& a, int g) {
  if (g < 2) throw InvalidArgument("g must be at least 2");
  const auto& v = a.vec();
  std::vector<Element> diffs;
  diffs.reserve(v.size() * (v.size() - (v.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) diffs.push_back(v[j] - v[i]);
  std::sort(diffs.begin(), diffs.end());
  for (std::size_t i = 0; i < diffs.size();) {
    std::size_t j = i;
    while (j < diffs.size() && diffs[j] == diffs[i]) ++j;
    if (j - i >= static_cast<std::size_t>(g)) return false;
    i = j;
  }
  return true;
}

namespace {

bool congruent(const std::vector<Element>& x, const std::vector<Element>& y) {
  // y = x + k for k = y[0] - x[0], checked element by element
  const auto k = static_cast<std::int64_t>(y[0]) - static_cast<std::int64_t>(x[0]);
  for (std::size_t t = 0; t < x.size(); ++t)
    if (static_cast<std::int64_t>(y[t]) - static_cast<std::int64_t>(x[t]) != k) return false;
  return true;
}

bool disjoint(const std::vector<Element>& x, const std::vector<Element>& y) {
  for (Element u : x)
    for (Element v : y)
      if (u == v) return false;
  return true;
}

}  // namespace

bool brute_force_verify(const IntegerSet& a, const Params& p) {
  p.validate();
  const auto h = static_cast<std::size_t>(p.h);
  const auto g = static_cast<std::size_t>(p.g);
  if (detail::binomial_saturating(a.size(), h) > kOracleSubsetCap)
    throw OracleTooLarge("oracle would enumerate more than " + std::to_string(kOracleSubsetCap) +
                         " subsets");
  std::vector<std::vector<Element>> subsets;
  const auto& v = a.vec();
  detail::for_each_combination(v.size(), h, [&](std::span<const std::size_t> idx) {
    std::vector<Element> s;
    for (auto i : idx) s.push_back(v[i]);
    subsets.push_back(std::move(s));
    return true;
  });

  const bool weak = p.mode == Mode::weak;
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> extend = [&](std::size_t start) {
    if (chosen.size() == g) return true;
    for (std::size_t j = start; j < subsets.size(); ++j) {
      if (!congruent(subsets[chosen.front()], subsets[j])) continue;
      if (weak && !std::all_of(chosen.begin(), chosen.end(),
                               [&](std::size_t c) { return disjoint(subsets[c], subsets[j]); }))
        continue;
      chosen.push_back(j);
      if (extend(j + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    chosen.assign(1, i);
    if (extend(i + 1)) return false;
  }
  return true;
}

bool witness_is_valid(const IntegerSet& a, const Witness& w) {
  if (w.offsets.empty()) return false;
  for (std::size_t i = 1; i < w.offsets.size(); ++i)
    if (w.offsets[i - 1] >= w.offsets[i]) return false;
  for (std::size_t i = 1; i < w.shape.deltas.size(); ++i)
    if (w.shape.deltas[i - 1] >= w.shape.deltas[i]) return false;
  if (!w.shape.deltas.empty() && w.shape.deltas.front() == 0) return false;
  std::vector<Element> all;
  const auto pts = w.shape.points();
  for (Element k : w.offsets)
    for (Element d : pts) {
      if (!a.contains(k + d)) return false;
      all.push_back(k + d);
    }
  if (w.disjoint) {
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  }
  return true;
}

bool insertion_violates(const IntegerSet& a, Element x, const Params& p, std::uint64_t budget) {
  p.validate();
  if (a.contains(x)) return false;
  const auto h = static_cast<std::size_t>(p.h);
  const auto g = static_cast<std::size_t>(p.g);
  const auto& v = a.vec();

  // shapes through x, with the offsets at which x is covered
  std::map<Shape, std::vector<Element>> through_x;
  std::vector<Element> pts(h);
  detail::for_each_combination(v.size(), h - 1, [&](std::span<const std::size_t> idx) {
    for (std::size_t t = 0; t < idx.size(); ++t) pts[t] = v[idx[t]];
    pts[h - 1] = x;
    const Element lo = *std::min_element(pts.begin(), pts.end());
    through_x[normalize_shape(pts)].push_back(lo);
    return true;
  });
  if (through_x.empty()) return false;

  std::vector<Element> extended = v;
  extended.insert(std::upper_bound(extended.begin(), extended.end(), x), x);
  const IntegerSet with_x = IntegerSet::from_sorted(std::move(extended));

  for (auto& [shape, ks] : through_x) {
    const auto offsets = translate_offsets(with_x, shape);
    if (offsets.size() < g) continue;
    if (p.mode == Mode::strict) return true;
    const auto diffs = shape_positive_differences(shape);
    const detail::ConflictGraph graph(offsets, diffs);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (Element k : ks) {
      const auto vi = static_cast<std::size_t>(
          std::lower_bound(offsets.begin(), offsets.end(), k) - offsets.begin());
      detail::Bits cand(offsets.size());
      cand.set_all();
      cand.and_not(graph.neighbors(vi));
      cand.reset(vi);
      const auto r = detail::find_independent_set(graph, cand, g - 1, budget);
      if (r.status == detail::SearchStatus::found) return true;
      if (r.status == detail::SearchStatus::budget_exhausted)
        throw BudgetExhausted("independent-set search exceeded " + std::to_string(budget) +
                              " nodes");
    }
  }
  return false;
}

StrictShapeCounter::StrictShapeCounter(Params p) : params_(p) { params_.validate(); }

bool StrictShapeCounter::try_insert(Element x) {
  if (std::binary_search(elements_.begin(), elements_.end(), x)) return false;
  const auto h = static_cast<std::size_t>(params_.h);
  const auto g = static_cast<std::uint32_t>(params_.g);
  std::unordered_map<Shape, std::uint32_t, ShapeHash> added;
  std::vector<Element> pts(h);
  bool ok = detail::for_each_combination(
      elements_.size(), h - 1, [&](std::span<const std::size_t> idx) {
        for (std::size_t t = 0; t < idx.size(); ++t) pts[t] = elements_[idx[t]];
        pts[h - 1] = x;
        Shape s = normalize_shape(pts);
        const auto it = counts_.find(s);
        const std::uint32_t before = it == counts_.end() ? 0 : it->second;
        return before + ++added[std::move(s)] < g;
      });
  if (!ok) return false;
  for (auto& [s, c] : added) counts_[s] += c;
  elements_.insert(std::upper_bound(elements_.begin(), elements_.end(), x), x);
  return true;
}

}  // namespace chg
