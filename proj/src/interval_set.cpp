#include "jacobi2d/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jacobi2d {

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
  for (const Interval& iv : intervals) {
    if (!(iv.lo <= iv.hi)) throw std::invalid_argument("interval with lo > hi or NaN endpoint");
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  IntervalSet out;
  for (const Interval& iv : intervals) {
    if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
      out.parts_.back().hi = std::max(out.parts_.back().hi, iv.hi);
    } else {
      out.parts_.push_back(iv);
    }
  }
  return out;
}

double IntervalSet::measure() const noexcept {
  double total = 0.0;
  for (const Interval& iv : parts_) total += iv.length();
  return total;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all(parts_);
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return from_intervals(std::move(all));
}

IntervalSet IntervalSet::close_gaps(double width) const {
  IntervalSet out;
  for (const Interval& iv : parts_) {
    if (!out.parts_.empty() && iv.lo - out.parts_.back().hi <= width) {
      out.parts_.back().hi = iv.hi;
    } else {
      out.parts_.push_back(iv);
    }
  }
  return out;
}

double IntervalSet::scale() const noexcept {
  double s = 1.0;
  for (const Interval& iv : parts_) s = std::max({s, 1.0 + std::abs(iv.lo), 1.0 + std::abs(iv.hi)});
  return s;
}

bool IntervalSet::contains(double point, double tol) const noexcept {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), point + tol,
                             [](double p, const Interval& iv) { return p < iv.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return point <= it->hi + tol;
}

bool IntervalSet::contains(const IntervalSet& other, double tol) const noexcept {
  return std::all_of(other.parts_.begin(), other.parts_.end(), [&](const Interval& iv) {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& host) {
      return host.lo - tol <= iv.lo && iv.hi <= host.hi + tol;
    });
  });
}

}  // namespace jacobi2d
