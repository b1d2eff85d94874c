#include "virmod/interval_set.hpp"

#include <algorithm>

namespace virmod {

IntervalSet::IntervalSet(std::vector<Interval> pieces) : pieces_(std::move(pieces)) { normalize(); }

IntervalSet IntervalSet::from_values(const std::set<std::int64_t>& values) {
  IntervalSet s;
  for (auto v : values) {
    if (!s.pieces_.empty() && s.pieces_.back().hi + 1 == v)
      s.pieces_.back().hi = v;
    else
      s.pieces_.push_back({v, v});
  }
  return s;
}

void IntervalSet::normalize() {
  std::erase_if(pieces_, [](const Interval& iv) { return iv.lo > iv.hi; });
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const auto& iv : pieces_) {
    if (!merged.empty() && iv.lo <= merged.back().hi + 1)
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    else
      merged.push_back(iv);
  }
  pieces_ = std::move(merged);
}

void IntervalSet::add(Interval iv) {
  pieces_.push_back(iv);
  normalize();
}

void IntervalSet::add(const IntervalSet& other) {
  pieces_.insert(pieces_.end(), other.pieces_.begin(), other.pieces_.end());
  normalize();
}

bool IntervalSet::contains(std::int64_t x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](std::int64_t v, const Interval& iv) { return v < iv.lo; });
  if (it == pieces_.begin()) return false;
  --it;
  return x <= it->hi;
}

std::size_t IntervalSet::size() const {
  std::size_t n = 0;
  for (const auto& iv : pieces_) n += static_cast<std::size_t>(iv.hi - iv.lo + 1);
  return n;
}

std::set<std::int64_t> IntervalSet::expand() const {
  std::set<std::int64_t> out;
  for (const auto& iv : pieces_)
    for (auto v = iv.lo; v <= iv.hi; ++v) out.insert(v);
  return out;
}

IntervalSet IntervalSet::minus(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (auto iv : pieces_) {
    for (const auto& cut : other.pieces_) {
      if (cut.hi < iv.lo || cut.lo > iv.hi) continue;
      if (cut.lo > iv.lo) out.push_back({iv.lo, cut.lo - 1});
      iv.lo = cut.hi + 1;
      if (iv.lo > iv.hi) break;
    }
    if (iv.lo <= iv.hi) out.push_back(iv);
  }
  return IntervalSet(std::move(out));
}

std::string IntervalSet::to_string() const {
  if (pieces_.empty()) return "∅";
  std::string s;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) s += " ∪ ";
    s += "[" + std::to_string(pieces_[i].lo) + "," + std::to_string(pieces_[i].hi) + "]";
  }
  return s;
}

}  // namespace virmod
