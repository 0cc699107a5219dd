#pragma once

#include <span>
#include <vector>

namespace jacobi2d {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Finite union of closed real intervals kept sorted and pairwise disjoint.
/// Overlapping or touching intervals ([a,b] and [b,c]) are merged, so the
/// stored sequence is strictly increasing with gaps of positive length.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Normalizes arbitrary input: intervals with lo > hi are rejected with
  /// std::invalid_argument, everything else is sorted and merged.
  static IntervalSet from_intervals(std::vector<Interval> intervals);

  std::span<const Interval> intervals() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  std::size_t size() const noexcept { return parts_.size(); }

  /// Lebesgue measure, summed left to right.
  double measure() const noexcept;

  IntervalSet unite(const IntervalSet& other) const;

  /// Merges neighbours separated by a gap of at most `width` (>= 0).
  IntervalSet close_gaps(double width) const;

  /// 1 + the largest endpoint magnitude; 1 for the empty set.
  double scale() const noexcept;

  /// Whether the point lies in some interval widened by `tol` on each side.
  bool contains(double point, double tol = 0.0) const noexcept;

  /// Whether every interval of `other` lies inside a single interval of this
  /// set widened by `tol` on each side.
  bool contains(const IntervalSet& other, double tol = 0.0) const noexcept;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> parts_;
};

}  // namespace jacobi2d
