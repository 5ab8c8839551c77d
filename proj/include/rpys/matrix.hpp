#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rpys/dedup.hpp"

namespace rpys {

/// Inclusive range of citing years.
struct YearRange {
  int first = 0;
  int last = 0;

  int size() const noexcept { return last - first + 1; }
  bool contains(int year) const noexcept { return year >= first && year <= last; }

  friend bool operator==(const YearRange&, const YearRange&) = default;
};

struct SmoothingConfig {
  int n_pct_range = 2;   // neighbouring citing years on each side for the percentile indicators
  int median_range = 2;  // neighbouring reference years on each side for the RPYS median

  void validate() const;

  friend bool operator==(const SmoothingConfig&, const SmoothingConfig&) = default;
};

/// Dense cited-reference x citing-year count table. Immutable once built.
class CitationMatrix {
 public:
  CitationMatrix(std::vector<MergedCR> rows, YearRange years);

  const std::vector<MergedCR>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  YearRange citing_years() const noexcept { return years_; }

  /// Count of `row` in `year`; 0 for years outside the range.
  std::uint64_t count(std::size_t row, int year) const noexcept {
    if (!years_.contains(year)) return 0;
    return cells_[row * width_ + static_cast<std::size_t>(year - years_.first)];
  }

  /// All in-range counts of one row, index 0 = first citing year.
  std::span<const std::uint32_t> row_counts(std::size_t row) const noexcept {
    return {cells_.data() + row * width_, width_};
  }

  std::uint64_t year_total(int year) const noexcept;
  std::uint64_t year_distinct(int year) const noexcept;

 private:
  std::vector<MergedCR> rows_;
  YearRange years_;
  std::size_t width_;
  std::vector<std::uint32_t> cells_;
  std::vector<std::uint64_t> totals_;
  std::vector<std::uint64_t> distinct_;
};

/// Throws DataError("empty corpus") when `merged` is empty. Counts outside
/// `py_range` are not represented in the matrix.
CitationMatrix build_matrix(std::vector<MergedCR> merged, YearRange py_range);

/// Sum of the row's counts over [year - r, year + r] clipped to the matrix range.
std::uint64_t windowed_count(const CitationMatrix& matrix, std::size_t row, int year, int r);

struct Population {
  std::uint64_t n = 0;      // rows with a positive windowed count
  std::uint64_t total = 0;  // sum of windowed counts

  friend bool operator==(const Population&, const Population&) = default;
};

Population windowed_population(const CitationMatrix& matrix, int year, int r);

/// Clipped window [max(year - r, first), min(year + r, last)].
YearRange clip_window(YearRange range, int year, int r) noexcept;

}  // namespace rpys
