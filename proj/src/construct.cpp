#include "chg/construct.hpp"

#include <sstream>

#include "chg/bounds.hpp"
#include "chg/independent_set.hpp"
#include "chg/verify.hpp"

namespace chg {

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t attempt) {
  if (attempt == 0) return seed;
  std::uint64_t z = seed + attempt * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

IntegerSet bernoulli_sample(std::uint64_t n, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("sampling probability must lie in (0,1)");
  Rng rng(seed);
  std::vector<Element> out;
  for (Element m = 1; m <= n; ++m)
    if (uniform01(rng) < p) out.push_back(m);
  return IntegerSet::from_sorted(std::move(out), n);
}

IntegerSet bad_elements(const IntegerSet& s, const Params& p, std::uint64_t budget) {
  p.validate();
  const auto g = static_cast<std::size_t>(p.g);
  std::vector<Element> bad;
  for_each_repeated_shape(s, p.h, g, [&](const Shape& shape, std::span<const Element> offsets) {
    const auto diffs = shape_positive_differences(shape);
    const detail::ConflictGraph graph(offsets, diffs);
    for (std::size_t i = g - 1; i < offsets.size(); ++i) {
      // g-1 earlier offsets, disjoint from each other and from offsets[i]
      detail::Bits earlier(offsets.size());
      earlier.set_all();
      earlier.clear_from(i);
      earlier.and_not(graph.neighbors(i));
      if (earlier.count() < g - 1) continue;
      const auto r = detail::find_independent_set(graph, earlier, g - 1, budget);
      if (r.status == detail::SearchStatus::budget_exhausted)
        throw BudgetExhausted("bad-element search exceeded " + std::to_string(budget) + " nodes");
      if (r.status == detail::SearchStatus::found) bad.push_back(offsets[i]);
    }
    return true;
  });
  return IntegerSet(std::move(bad));
}

IntegerSet strict_bad_elements(const IntegerSet& s, const Params& p) {
  p.validate();
  const auto g = static_cast<std::size_t>(p.g);
  std::vector<Element> bad;
  for_each_repeated_shape(s, p.h, g, [&](const Shape&, std::span<const Element> offsets) {
    bad.insert(bad.end(), offsets.begin() + static_cast<std::ptrdiff_t>(g - 1), offsets.end());
    return true;
  });
  return IntegerSet(std::move(bad));
}

DeletionTrace random_deletion(std::uint64_t n, const Params& p, std::uint64_t seed,
                              std::uint64_t max_retries, std::uint64_t budget) {
  p.validate();
  const double prob = deletion_p(n, p.h, p.g);
  if (!(prob < 1.0)) throw InvalidArgument("n too small: sampling density is not below 1");
  const double np = static_cast<double>(n) * prob;

  DeletionTrace t;
  for (std::uint64_t attempt = 0; attempt <= max_retries; ++attempt) {
    t = DeletionTrace{};
    t.n = n;
    t.params = Params{p.h, p.g, Mode::weak};
    t.p = prob;
    t.seed = trial_seed(seed, attempt);
    t.attempts = attempt + 1;
    t.sample = bernoulli_sample(n, prob, t.seed);
    try {
      t.bad = bad_elements(t.sample, p, budget);
    } catch (const BudgetExhausted&) {
      t.bad = strict_bad_elements(t.sample, p);
      t.strict_fallback = true;
    }
    t.result = t.sample.minus(t.bad);
    t.success = static_cast<double>(t.sample.size()) >= np / 2 &&
                static_cast<double>(t.bad.size()) <= np / 4;
    if (t.success) break;
  }
  return t;
}

namespace {

std::string join(const IntegerSet& s) {
  std::string out;
  for (Element x : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

}  // namespace

std::string format_trace(const DeletionTrace& t) {
  std::ostringstream o;
  o << "n=" << t.n << '\n'
    << "h=" << t.params.h << '\n'
    << "g=" << t.params.g << '\n'
    << "p=" << format_double(t.p) << '\n'
    << "np=" << format_double(t.p * static_cast<double>(t.n)) << '\n'
    << "seed=" << t.seed << '\n'
    << "attempts=" << t.attempts << '\n'
    << "sample_size=" << t.sample.size() << '\n'
    << "bad_size=" << t.bad.size() << '\n'
    << "result_size=" << t.result.size() << '\n'
    << "success=" << (t.success ? "true" : "false") << '\n'
    << "bad_detection=" << (t.strict_fallback ? "strict_fallback" : "exact") << '\n'
    << "sample=" << join(t.sample) << '\n'
    << "bad=" << join(t.bad) << '\n'
    << "result=" << join(t.result) << '\n';
  return o.str();
}

IntegerSet greedy(std::uint64_t n, const Params& p, std::uint64_t budget) {
  p.validate();
  if (p.mode == Mode::strict) {
    StrictShapeCounter counter(p);
    for (Element m = 1; m <= n; ++m) counter.try_insert(m);
    return IntegerSet::from_sorted(counter.elements(), n);
  }
  std::vector<Element> kept;
  for (Element m = 1; m <= n; ++m) {
    // m is the new maximum, so appending keeps the vector sorted
    if (!insertion_violates(IntegerSet::from_sorted(kept), m, p, budget)) kept.push_back(m);
  }
  return IntegerSet::from_sorted(std::move(kept), n);
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d <= q / d; ++d)
    if (q % d == 0) return false;
  return true;
}

IntegerSet sidon_erdos_turan(std::uint64_t q) {
  if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
  if (q > (std::uint64_t{1} << 31)) throw Overflow("prime too large for 64-bit elements");
  std::vector<Element> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(2 * q * i + (i * i) % q);
  return IntegerSet::from_sorted(std::move(out));
}

}  // namespace chg
