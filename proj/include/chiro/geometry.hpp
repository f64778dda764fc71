#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "chiro/chirotope.hpp"

namespace chiro {

using Rational = mpq_class;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Exact orientation of (p, q, r); +1 iff counterclockwise.
/// Throws GeneralPositionViolation when the three points are collinear.
Sign orient(const Point& p, const Point& q, const Point& r);

/// Sign of det(q - p, r - p) without the general-position check: -1, 0 or +1.
int orient_raw(const Point& p, const Point& q, const Point& r);

/// Labeled points in general position; label = index.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](Label i) const { return points_[static_cast<std::size_t>(i)]; }
  std::span<const Point> points() const { return points_; }

  /// Index list of the convex hull vertices in counterclockwise order,
  /// starting from the leftmost (then lowest) point. Computed geometrically
  /// (monotone chain), independent of the chirotope predicates.
  std::vector<Label> convex_hull() const;

 private:
  std::vector<Point> points_;
};

/// Validates general position by checking every triple.
void require_general_position(const PointSet& ps);

Chirotope chirotope_from_points(const PointSet& ps);

Rational parse_rational(const std::string& text);

}  // namespace chiro
