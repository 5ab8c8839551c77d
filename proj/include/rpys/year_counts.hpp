#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace rpys {

struct YearCount {
  std::int32_t year;
  std::uint64_t count;

  friend bool operator==(const YearCount&, const YearCount&) = default;
};

/// Sparse citing-year -> occurrence-count map stored as a sorted flat vector.
/// A cited reference is seen in at most a few dozen citing years, so lookups
/// by binary search beat a node-based map on both speed and footprint.
/// Zero counts are never stored.
class YearCounts {
 public:
  using const_iterator = std::vector<YearCount>::const_iterator;

  void add(int year, std::uint64_t n = 1) {
    if (n == 0) return;
    auto it = lower(year);
    if (it != entries_.end() && it->year == year) {
      it->count += n;
    } else {
      entries_.insert(it, YearCount{year, n});
    }
    total_ += n;
  }

  std::uint64_t at(int year) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), year,
                               [](const YearCount& e, int y) { return e.year < y; });
    return (it != entries_.end() && it->year == year) ? it->count : 0;
  }

  void merge_from(const YearCounts& other) {
    for (const auto& e : other.entries_) add(e.year, e.count);
  }

  std::uint64_t total() const noexcept { return total_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const_iterator begin() const noexcept { return entries_.begin(); }
  const_iterator end() const noexcept { return entries_.end(); }

  std::size_t heap_bytes() const noexcept { return entries_.capacity() * sizeof(YearCount); }
  void shrink_to_fit() { entries_.shrink_to_fit(); }

  friend bool operator==(const YearCounts& a, const YearCounts& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<YearCount>::iterator lower(int year) {
    return std::lower_bound(entries_.begin(), entries_.end(), year,
                            [](const YearCount& e, int y) { return e.year < y; });
  }

  std::vector<YearCount> entries_;
  std::uint64_t total_ = 0;
};

}  // namespace rpys
