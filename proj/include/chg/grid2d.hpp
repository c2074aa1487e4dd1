#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "chg/core.hpp"
#include "chg/verify.hpp"

namespace chg::grid {

using Coord = std::uint64_t;
using Point = std::pair<Coord, Coord>;                 // (x, y)
using Delta = std::pair<std::int64_t, std::int64_t>;  // (dx, dy)

/// Distinct points of [0,n]^2, kept in lexicographic order.
class GridSet {
 public:
  GridSet() = default;
  /// Sorts and deduplicates; throws ElementOutOfRange for coordinates > n.
  GridSet(std::vector<Point> points, Coord n);

  [[nodiscard]] const std::vector<Point>& points() const noexcept { return points_; }
  [[nodiscard]] Coord n() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

  /// Shift by (dx, dy); the bound grows to keep every point inside.
  [[nodiscard]] GridSet translated(Coord dx, Coord dy) const;

  friend bool operator==(const GridSet&, const GridSet&) = default;

 private:
  std::vector<Point> points_;
  Coord n_ = 0;
};

/// Pattern up to translation: offsets of the other points from the
/// lexicographically smallest one, sorted.
struct GridShape {
  std::vector<Delta> deltas;
  friend auto operator<=>(const GridShape&, const GridShape&) = default;
};

GridShape normalize_grid_shape(std::vector<Point> points);

struct GridWitness {
  GridShape shape;
  std::vector<Point> offsets;  // lexicographically smallest point of each translate
  bool disjoint = false;
};

struct GridReport {
  Verdict verdict = Verdict::holds;
  std::vector<GridWitness> witnesses;
  std::uint64_t shapes_examined = 0;
  bool budget_exhausted = false;

  [[nodiscard]] bool holds() const noexcept { return verdict == Verdict::holds; }
};

/// Translation-only C_h[g] check in the plane (weak per p.mode). Points are
/// packed as x*(2n+1)+y, which turns planar translates into integer
/// translates exactly, and the 1D verifier does the rest.
GridReport is_grid_chg(const GridSet& a, const Params& p, const VerifyOptions& opts = {});

enum class ScanOrder { row_major, random };

/// Visits the cells of [1,n]^2 in the given order, keeping each cell that
/// preserves the property. Random order needs a seed.
GridSet grid_greedy(Coord n, const Params& p, ScanOrder order, std::uint64_t seed = 0);

// Point file: one "x y" pair per line, '#' comments.
GridSet parse_points(std::istream& in);
GridSet read_points_file(const std::string& path);
void write_points(std::ostream& out, const GridSet& set);

std::string to_string(const GridShape& shape);

}  // namespace chg::grid
