#include "chg/seqstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "combinatorics.hpp"

namespace chg {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a)
    throw Overflow("block statistic exceeds 64-bit range");
  return a + b;
}

std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k) {
  const auto r = detail::binomial_saturating(n, k);
  if (r == std::numeric_limits<std::uint64_t>::max())
    throw Overflow("binomial coefficient exceeds 64-bit range");
  return r;
}

std::uint64_t checked_power(std::uint64_t base, int e) {
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > std::numeric_limits<std::uint64_t>::max()) throw Overflow("power exceeds 64-bit range");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t counting_function(const IntegerSet& a, Element x) {
  return static_cast<std::uint64_t>(std::upper_bound(a.begin(), a.end(), x) - a.begin());
}

BlockProfile block_profile(const IntegerSet& a, std::uint64_t N, const Params& p) {
  p.validate();
  if (N < 2) throw InvalidArgument("N must be at least 2");
  if (N > (std::uint64_t{1} << 32) - 1) throw Overflow("N^2 exceeds 64-bit range");
  const std::uint64_t limit = N * N;
  if (!a.empty() && a.max() >= limit)
    throw ElementOutOfRange("element " + std::to_string(a.max()) + " is outside [0, N^2 = " +
                            std::to_string(limit) + ")");

  BlockProfile out;
  out.N = N;
  out.h = p.h;
  out.g = p.g;
  out.counts.assign(N, 0);
  for (Element x : a) ++out.counts[x / N];
  for (auto c : out.counts) {
    out.lhs = checked_add(out.lhs, checked_binomial(c, static_cast<std::uint64_t>(p.h)));
    out.power_sum = checked_add(out.power_sum, checked_power(c, p.h));
  }
  const auto classes = checked_binomial(N - 1, static_cast<std::uint64_t>(p.h - 1));
  const auto per_class = static_cast<std::uint64_t>(p.g - 1);
  if (classes != 0 && per_class > std::numeric_limits<std::uint64_t>::max() / classes)
    throw Overflow("class bound exceeds 64-bit range");
  out.rhs = per_class * classes;
  return out;
}

std::string format_profile_csv(const BlockProfile& profile) {
  std::ostringstream o;
  o << "nu,count\n";
  for (std::size_t v = 0; v < profile.counts.size(); ++v)
    o << v + 1 << ',' << profile.counts[v] << '\n';
  o << "\nN,h,g,lhs,rhs,power_sum\n"
    << profile.N << ',' << profile.h << ',' << profile.g << ',' << profile.lhs << ','
    << profile.rhs << ',' << profile.power_sum << '\n';
  return o.str();
}

double thm3_statistic(const IntegerSet& a, double x, int h) {
  if (h < 1) throw InvalidArgument("h must be positive");
  if (!(x >= 2)) throw InvalidArgument("x must be at least 2");
  const auto count = static_cast<double>(counting_function(a, static_cast<Element>(std::floor(x))));
  const double hd = h;
  return count * std::pow(std::log(x), 1.0 / hd) / std::pow(x, 1.0 - 1.0 / hd);
}

double tau(const IntegerSet& a, std::uint64_t m, std::span<const std::uint64_t> sample_xs, int h) {
  if (sample_xs.empty()) throw EmptySample("tau needs at least one sample point");
  const Element top = a.empty() ? 0 : a.max();
  double best = std::numeric_limits<double>::infinity();
  for (auto x : sample_xs) {
    if (x < m || x > top)
      throw InvalidArgument("sample point " + std::to_string(x) + " outside [m, max(a)]");
    best = std::min(best, thm3_statistic(a, static_cast<double>(x), h));
  }
  return best;
}

std::vector<std::uint64_t> geometric_samples(std::uint64_t m, std::uint64_t top) {
  std::vector<std::uint64_t> xs;
  if (m < 2) m = 2;
  for (std::uint64_t x = m; x <= top; x *= 2) {
    xs.push_back(x);
    if (x > top / 2) break;
  }
  if (m <= top && (xs.empty() || xs.back() != top)) xs.push_back(top);
  return xs;
}

}  // namespace chg
