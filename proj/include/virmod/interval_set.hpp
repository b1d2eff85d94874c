#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace virmod {

struct Interval {
  std::int64_t lo;
  std::int64_t hi;  // inclusive
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of integer intervals, kept sorted, disjoint and with
/// adjacent pieces merged, so equal sets compare equal.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> pieces);

  static IntervalSet from_values(const std::set<std::int64_t>& values);

  /// Empty intervals (lo > hi) are ignored.
  void add(Interval iv);
  void add(const IntervalSet& other);

  const std::vector<Interval>& intervals() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool contains(std::int64_t x) const;
  std::size_t size() const;
  std::set<std::int64_t> expand() const;

  IntervalSet minus(const IntervalSet& other) const;

  /// "[1,4] ∪ [6,7] ∪ [10,10]"; "∅" when empty.
  std::string to_string() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
  void normalize();
  std::vector<Interval> pieces_;
};

}  // namespace virmod
