#include "chg/grid2d.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "chg/construct.hpp"

namespace chg::grid {

namespace {

// x*w + y with w = 2n+1: |dy| <= n < w/2 makes the decoding of differences
// unique, so integer translates of the packed set are exactly the planar ones.
struct Packing {
  Coord n;
  Coord w;
  explicit Packing(Coord bound) : n(bound), w(2 * bound + 1) {
    if (bound > (Coord{1} << 30)) throw Overflow("grid bound too large to pack into 64 bits");
  }
  [[nodiscard]] Element pack(Point p) const { return p.first * w + p.second; }
  [[nodiscard]] Point unpack(Element e) const { return {e / w, e % w}; }
  [[nodiscard]] Delta unpack_delta(Element d) const {
    const auto dx = (d + n) / w;
    return {static_cast<std::int64_t>(dx),
            static_cast<std::int64_t>(d) - static_cast<std::int64_t>(dx * w)};
  }
};

IntegerSet pack_set(const GridSet& a, const Packing& pk) {
  std::vector<Element> v;
  v.reserve(a.size());
  for (const auto& p : a.points()) v.push_back(pk.pack(p));
  return IntegerSet(std::move(v));
}

}  // namespace

GridSet::GridSet(std::vector<Point> points, Coord n) : points_(std::move(points)), n_(n) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  for (const auto& [x, y] : points_)
    if (x > n_ || y > n_)
      throw ElementOutOfRange("point (" + std::to_string(x) + "," + std::to_string(y) +
                              ") outside [0," + std::to_string(n_) + "]^2");
}

GridSet GridSet::translated(Coord dx, Coord dy) const {
  std::vector<Point> out;
  out.reserve(points_.size());
  for (const auto& [x, y] : points_) out.emplace_back(x + dx, y + dy);
  return GridSet(std::move(out), n_ + std::max(dx, dy));
}

GridShape normalize_grid_shape(std::vector<Point> points) {
  if (points.size() < 2) throw InvalidShape("a pattern needs at least two points");
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw InvalidShape("pattern points must be distinct");
  GridShape s;
  const auto [x0, y0] = points.front();
  for (std::size_t i = 1; i < points.size(); ++i)
    s.deltas.emplace_back(static_cast<std::int64_t>(points[i].first) - static_cast<std::int64_t>(x0),
                          static_cast<std::int64_t>(points[i].second) - static_cast<std::int64_t>(y0));
  return s;
}

GridReport is_grid_chg(const GridSet& a, const Params& p, const VerifyOptions& opts) {
  const Packing pk(a.n());
  const auto r = verify(pack_set(a, pk), p, opts);
  GridReport out;
  out.verdict = r.verdict;
  out.shapes_examined = r.shapes_examined;
  out.budget_exhausted = r.budget_exhausted;
  for (const auto& w : r.witnesses) {
    GridWitness gw;
    gw.disjoint = w.disjoint;
    for (auto d : w.shape.deltas) gw.shape.deltas.push_back(pk.unpack_delta(d));
    for (auto k : w.offsets) gw.offsets.push_back(pk.unpack(k));
    out.witnesses.push_back(std::move(gw));
  }
  return out;
}

GridSet grid_greedy(Coord n, const Params& p, ScanOrder order, std::uint64_t seed) {
  p.validate();
  const Packing pk(n);
  std::vector<Point> cells;
  cells.reserve(n * n);
  for (Coord y = 1; y <= n; ++y)
    for (Coord x = 1; x <= n; ++x) cells.emplace_back(x, y);
  if (order == ScanOrder::random) {
    Rng rng(seed);
    for (std::size_t i = cells.size(); i > 1; --i) {
      // unbiased draw from [0, i)
      const std::uint64_t bound = i;
      const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
      std::uint64_t r;
      do r = rng();
      while (r >= limit);
      std::swap(cells[i - 1], cells[r % bound]);
    }
  }

  std::vector<Point> kept;
  if (p.mode == Mode::strict) {
    StrictShapeCounter counter(p);
    for (const auto& c : cells)
      if (counter.try_insert(pk.pack(c))) kept.push_back(c);
  } else {
    std::vector<Element> packed;
    for (const auto& c : cells) {
      const Element e = pk.pack(c);
      const IntegerSet current(packed);
      if (!insertion_violates(current, e, p)) {
        packed.push_back(e);
        kept.push_back(c);
      }
    }
  }
  return GridSet(std::move(kept), n);
}

GridSet parse_points(std::istream& in) {
  std::vector<Point> pts;
  Coord bound = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.find('-') != std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": negative coordinates are not allowed");
    std::istringstream ls(line);
    Coord x = 0, y = 0;
    std::string extra;
    if (!(ls >> x >> y) || (ls >> extra))
      throw ParseError("line " + std::to_string(lineno) + ": expected 'x y'");
    pts.emplace_back(x, y);
    bound = std::max({bound, x, y});
  }
  const auto count = pts.size();
  GridSet s(std::move(pts), bound);
  if (s.size() != count) throw ParseError("duplicate points in point file");
  return s;
}

GridSet read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point file '" + path + "'");
  return parse_points(in);
}

void write_points(std::ostream& out, const GridSet& set) {
  for (const auto& [x, y] : set.points()) out << x << ' ' << y << '\n';
}

std::string to_string(const GridShape& shape) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.deltas.size(); ++i) {
    if (i) s += ',';
    s += "(" + std::to_string(shape.deltas[i].first) + "," + std::to_string(shape.deltas[i].second) + ")";
  }
  return s + ")";
}

}  // namespace chg::grid
