#include "rpys/matrix.hpp"

#include <algorithm>
#include <limits>

#include "rpys/error.hpp"

namespace rpys {

void SmoothingConfig::validate() const {
  if (n_pct_range < 0) throw ConfigError("n_pct_range must be >= 0");
  if (median_range < 0) throw ConfigError("median_range must be >= 0");
}

CitationMatrix::CitationMatrix(std::vector<MergedCR> rows, YearRange years)
    : rows_(std::move(rows)), years_(years), width_(static_cast<std::size_t>(years.size())) {
  if (years_.first > years_.last) throw ConfigError("citing-year range has first > last");
  cells_.assign(rows_.size() * width_, 0);
  totals_.assign(width_, 0);
  distinct_.assign(width_, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const YearCount& yc : rows_[r].counts_by_year) {
      if (!years_.contains(yc.year)) continue;
      if (yc.count > std::numeric_limits<std::uint32_t>::max()) {
        throw DataError("citation count exceeds 32-bit cell range: " + rows_[r].canonical_raw);
      }
      const auto col = static_cast<std::size_t>(yc.year - years_.first);
      cells_[r * width_ + col] = static_cast<std::uint32_t>(yc.count);
      totals_[col] += yc.count;
      ++distinct_[col];
    }
  }
}

std::uint64_t CitationMatrix::year_total(int year) const noexcept {
  return years_.contains(year) ? totals_[static_cast<std::size_t>(year - years_.first)] : 0;
}

std::uint64_t CitationMatrix::year_distinct(int year) const noexcept {
  return years_.contains(year) ? distinct_[static_cast<std::size_t>(year - years_.first)] : 0;
}

CitationMatrix build_matrix(std::vector<MergedCR> merged, YearRange py_range) {
  if (merged.empty()) throw DataError("empty corpus");
  return CitationMatrix(std::move(merged), py_range);
}

YearRange clip_window(YearRange range, int year, int r) noexcept {
  return {std::max(year - r, range.first), std::min(year + r, range.last)};
}

std::uint64_t windowed_count(const CitationMatrix& matrix, std::size_t row, int year, int r) {
  const YearRange w = clip_window(matrix.citing_years(), year, r);
  const auto counts = matrix.row_counts(row);
  std::uint64_t sum = 0;
  for (int t = w.first; t <= w.last; ++t) sum += counts[static_cast<std::size_t>(t - matrix.citing_years().first)];
  return sum;
}

Population windowed_population(const CitationMatrix& matrix, int year, int r) {
  Population pop;
  for (std::size_t row = 0; row < matrix.row_count(); ++row) {
    const std::uint64_t c = windowed_count(matrix, row, year, r);
    if (c > 0) {
      ++pop.n;
      pop.total += c;
    }
  }
  return pop;
}

}  // namespace rpys
