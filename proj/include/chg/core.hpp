#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chg {

using Element = std::uint64_t;

// Errors. Everything the library throws derives from chg::Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidArgument : Error { using Error::Error; };
struct InvalidShape : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct BudgetExhausted : Error { using Error::Error; };
struct OracleTooLarge : Error { using Error::Error; };
struct ParamOrder : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct ElementOutOfRange : Error { using Error::Error; };
struct EmptySample : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };

/// Finite set of non-negative integers, stored sorted and deduplicated.
class IntegerSet {
 public:
  IntegerSet() = default;
  /// Sorts and deduplicates. Throws ElementOutOfRange if an element exceeds n_hint.
  explicit IntegerSet(std::vector<Element> elements,
                      std::optional<Element> n_hint = std::nullopt);

  /// Like the constructor but rejects unsorted or duplicated input.
  static IntegerSet from_sorted(std::vector<Element> elements,
                                std::optional<Element> n_hint = std::nullopt);

  [[nodiscard]] std::span<const Element> elements() const noexcept { return elements_; }
  [[nodiscard]] const std::vector<Element>& vec() const noexcept { return elements_; }
  [[nodiscard]] std::optional<Element> n_hint() const noexcept { return n_hint_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
  [[nodiscard]] bool contains(Element x) const;
  [[nodiscard]] Element max() const { return elements_.back(); }

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  /// Every element shifted by c.
  [[nodiscard]] IntegerSet translated(Element c) const;
  /// Elements of *this not in other.
  [[nodiscard]] IntegerSet minus(const IntegerSet& other) const;
  [[nodiscard]] bool is_subset_of(const IntegerSet& other) const;

  friend bool operator==(const IntegerSet& a, const IntegerSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Element> elements_;
  std::optional<Element> n_hint_;
};

/// Translation class of an h-element set: the sorted nonzero elements after
/// shifting the minimum to 0. h = deltas.size() + 1.
struct Shape {
  std::vector<Element> deltas;

  [[nodiscard]] std::size_t h() const noexcept { return deltas.size() + 1; }
  /// {0} followed by the deltas.
  [[nodiscard]] std::vector<Element> points() const;

  friend auto operator<=>(const Shape&, const Shape&) = default;
};

struct ShapeHash {
  std::size_t operator()(const Shape& s) const noexcept;
};

enum class Mode { strict, weak };

struct Params {
  int h = 2;
  int g = 2;
  Mode mode = Mode::strict;

  /// Throws InvalidArgument unless h >= 2 and g >= 2.
  void validate() const;
};

/// Certificate of a violation: shape + k is inside the set for every offset k.
struct Witness {
  Shape shape;
  std::vector<Element> offsets;
  bool disjoint = false;
};

/// Canonical shape of a set of distinct points. Throws InvalidShape on
/// duplicates or fewer than two points.
Shape normalize_shape(std::span<const Element> points);

/// {x - y : x, y in shape}, sorted. Always contains 0 and is symmetric.
std::vector<std::int64_t> shape_difference_set(const Shape& shape);

/// Positive part of shape_difference_set, sorted.
std::vector<Element> shape_positive_differences(const Shape& shape);

// Set file format: one decimal integer per line, strictly increasing,
// '#' lines are comments, blank lines ignored.
IntegerSet parse_set(std::istream& in);
IntegerSet parse_set_string(const std::string& text);
IntegerSet read_set_file(const std::string& path);
void write_set(std::ostream& out, const IntegerSet& set);
std::string format_set(const IntegerSet& set);

std::string to_string(const Shape& shape);
std::string to_string(Mode mode);

/// Shortest round-trip decimal form; integral values keep a trailing ".0".
std::string format_double(double x);

}  // namespace chg
