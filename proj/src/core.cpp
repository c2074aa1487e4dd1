#include "chg/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace chg {

IntegerSet::IntegerSet(std::vector<Element> elements, std::optional<Element> n_hint)
    : elements_(std::move(elements)), n_hint_(n_hint) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (n_hint_ && !elements_.empty() && elements_.back() > *n_hint_)
    throw ElementOutOfRange("element " + std::to_string(elements_.back()) +
                            " exceeds universe bound " + std::to_string(*n_hint_));
}

IntegerSet IntegerSet::from_sorted(std::vector<Element> elements,
                                   std::optional<Element> n_hint) {
  for (std::size_t i = 1; i < elements.size(); ++i)
    if (elements[i - 1] >= elements[i])
      throw InvalidArgument("elements are not strictly increasing");
  return IntegerSet(std::move(elements), n_hint);
}

bool IntegerSet::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

IntegerSet IntegerSet::translated(Element c) const {
  std::vector<Element> out;
  out.reserve(elements_.size());
  for (Element x : elements_) {
    if (x > UINT64_MAX - c) throw Overflow("translation overflows 64-bit range");
    out.push_back(x + c);
  }
  return IntegerSet(std::move(out));
}

IntegerSet IntegerSet::minus(const IntegerSet& other) const {
  std::vector<Element> out;
  std::set_difference(elements_.begin(), elements_.end(), other.elements_.begin(),
                      other.elements_.end(), std::back_inserter(out));
  return IntegerSet(std::move(out), n_hint_);
}

bool IntegerSet::is_subset_of(const IntegerSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::vector<Element> Shape::points() const {
  std::vector<Element> p;
  p.reserve(deltas.size() + 1);
  p.push_back(0);
  p.insert(p.end(), deltas.begin(), deltas.end());
  return p;
}

std::size_t ShapeHash::operator()(const Shape& s) const noexcept {
  // splitmix-style mixing of each delta
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.deltas.size();
  for (Element d : s.deltas) {
    std::uint64_t z = d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

void Params::validate() const {
  if (h < 2 || g < 2)
    throw InvalidArgument("h and g must both be at least 2 (got h=" + std::to_string(h) +
                          ", g=" + std::to_string(g) + ")");
}

Shape normalize_shape(std::span<const Element> points) {
  if (points.size() < 2) throw InvalidShape("a shape needs at least two points");
  std::vector<Element> p(points.begin(), points.end());
  std::sort(p.begin(), p.end());
  if (std::adjacent_find(p.begin(), p.end()) != p.end())
    throw InvalidShape("shape points must be distinct");
  Shape s;
  s.deltas.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) s.deltas.push_back(p[i] - p[0]);
  return s;
}

std::vector<std::int64_t> shape_difference_set(const Shape& shape) {
  const auto pts = shape.points();
  std::vector<std::int64_t> d;
  d.reserve(pts.size() * pts.size());
  for (Element x : pts)
    for (Element y : pts) d.push_back(static_cast<std::int64_t>(x) - static_cast<std::int64_t>(y));
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

std::vector<Element> shape_positive_differences(const Shape& shape) {
  const auto pts = shape.points();
  std::vector<Element> d;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d.push_back(pts[j] - pts[i]);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

IntegerSet parse_set(std::istream& in) {
  std::vector<Element> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.front() == '-')
      throw ParseError("line " + std::to_string(lineno) + ": negative elements are not allowed");
    Element v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec == std::errc::result_out_of_range)
      throw ParseError("line " + std::to_string(lineno) + ": value out of 64-bit range");
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw ParseError("line " + std::to_string(lineno) + ": expected a decimal integer, got '" +
                       std::string(t) + "'");
    if (!out.empty() && v <= out.back())
      throw ParseError("line " + std::to_string(lineno) + ": elements must be strictly increasing");
    out.push_back(v);
  }
  return IntegerSet(std::move(out));
}

IntegerSet parse_set_string(const std::string& text) {
  std::istringstream in(text);
  return parse_set(in);
}

IntegerSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open set file '" + path + "'");
  return parse_set(in);
}

void write_set(std::ostream& out, const IntegerSet& set) {
  for (Element x : set) out << x << '\n';
}

std::string format_set(const IntegerSet& set) {
  std::ostringstream s;
  write_set(s, set);
  return s.str();
}

std::string to_string(const Shape& shape) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.deltas.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(shape.deltas[i]);
  }
  return s + ")";
}

std::string to_string(Mode mode) { return mode == Mode::strict ? "strict" : "weak"; }

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, ec == std::errc() ? ptr : buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace chg
