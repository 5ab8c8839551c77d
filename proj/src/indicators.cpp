#include "rpys/indicators.hpp"

#include <algorithm>
#include <functional>

#include <omp.h>

#include "rpys/error.hpp"

namespace rpys {
namespace {

struct YearStats {
  std::vector<std::uint64_t> windowed;  // per row
  Population pop;
  std::optional<std::uint64_t> threshold;
};

YearStats year_stats(const CitationMatrix& matrix, int year, const PercentileConfig& cfg) {
  YearStats st;
  st.windowed.resize(matrix.row_count());
  std::vector<std::uint64_t> positive;
  for (std::size_t row = 0; row < matrix.row_count(); ++row) {
    const std::uint64_t c = windowed_count(matrix, row, year, cfg.n_pct_range);
    st.windowed[row] = c;
    if (c > 0) {
      positive.push_back(c);
      st.pop.total += c;
    }
  }
  st.pop.n = positive.size();
  if (st.pop.n == 0) return st;
  const std::uint64_t rank = threshold_rank(st.pop.n, cfg.p);
  auto kth = positive.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(positive.begin(), kth, positive.end(), std::greater<>());
  st.threshold = *kth;
  return st;
}

// count > c and count > total / n, the latter as count * n > total.
bool passes(std::uint64_t count, const YearStats& st) {
  if (!st.threshold) return false;
  return count > *st.threshold &&
         static_cast<unsigned __int128>(count) * st.pop.n > static_cast<unsigned __int128>(st.pop.total);
}

}  // namespace

void PercentileConfig::validate() const {
  if (p <= Fraction(0) || p >= Fraction(1)) throw ConfigError("percentile p must lie in (0, 1), got " + p.to_string());
  if (n_pct_range < 0) throw ConfigError("n_pct_range must be >= 0");
}

std::uint64_t threshold_rank(std::uint64_t n, const Fraction& p) {
  const auto scaled = static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(p.num());
  return 1 + static_cast<std::uint64_t>(scaled / static_cast<unsigned __int128>(p.den()));
}

std::optional<std::uint64_t> threshold_count(const CitationMatrix& matrix, int year, const PercentileConfig& cfg) {
  return year_stats(matrix, year, cfg).threshold;
}

std::optional<Fraction> expected_count(const CitationMatrix& matrix, int year, const PercentileConfig& cfg) {
  const Population pop = windowed_population(matrix, year, cfg.n_pct_range);
  if (pop.n == 0) return std::nullopt;
  return Fraction(static_cast<std::int64_t>(pop.total), static_cast<std::int64_t>(pop.n));
}

bool is_top(const CitationMatrix& matrix, std::size_t row, int year, const PercentileConfig& cfg) {
  const YearStats st = year_stats(matrix, year, cfg);
  return passes(st.windowed[row], st);
}

std::uint64_t n_top(const CitationMatrix& matrix, std::size_t row, const PercentileConfig& cfg, YearRange range) {
  std::uint64_t n = 0;
  for (int year = range.first; year <= range.last; ++year) {
    if (is_top(matrix, row, year, cfg)) ++n;
  }
  return n;
}

namespace kernels {

std::vector<std::uint32_t> year_top_set(const CitationMatrix& matrix, int year, const PercentileConfig& cfg) {
  const YearStats st = year_stats(matrix, year, cfg);
  std::vector<std::uint32_t> top;
  for (std::size_t row = 0; row < st.windowed.size(); ++row) {
    if (passes(st.windowed[row], st)) top.push_back(static_cast<std::uint32_t>(row));
  }
  return top;
}

std::vector<std::uint64_t> n_top_all_serial(const CitationMatrix& matrix, const PercentileConfig& cfg,
                                            YearRange range) {
  std::vector<std::uint64_t> tally(matrix.row_count(), 0);
  for (int year = range.first; year <= range.last; ++year) {
    for (std::uint32_t row : year_top_set(matrix, year, cfg)) ++tally[row];
  }
  return tally;
}

std::vector<std::uint64_t> n_top_all_parallel(const CitationMatrix& matrix, const PercentileConfig& cfg,
                                              YearRange range) {
  std::vector<std::uint64_t> tally(matrix.row_count(), 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 1) nowait
    for (int year = range.first; year <= range.last; ++year) {
      const auto top = year_top_set(matrix, year, cfg);
      if (top.empty()) continue;
      if (local.empty()) local.assign(matrix.row_count(), 0);
      for (std::uint32_t row : top) ++local[row];
    }
    if (!local.empty()) {
#pragma omp critical
      for (std::size_t i = 0; i < local.size(); ++i) tally[i] += local[i];
    }
  }
  return tally;
}

}  // namespace kernels

std::vector<IndicatorRow> indicator_rows(const CitationMatrix& matrix, const PercentileConfig& cfg, YearRange range,
                                         Exec exec) {
  cfg.validate();
  const auto tally = exec == Exec::serial ? kernels::n_top_all_serial(matrix, cfg, range)
                                          : kernels::n_top_all_parallel(matrix, cfg, range);
  std::vector<IndicatorRow> rows;
  rows.reserve(matrix.row_count());
  for (std::size_t i = 0; i < matrix.row_count(); ++i) {
    const MergedCR& m = matrix.rows()[i];
    rows.push_back(IndicatorRow{m.canonical_raw, m.rpy, m.n_cr, tally[i]});
  }
  return rows;
}

std::vector<RpySpectrumRow> rpys_spectrum(int first_rpy, const std::vector<std::uint64_t>& n_cr_year,
                                          int median_range) {
  if (median_range < 0) throw ConfigError("median_range must be >= 0");
  const auto len = static_cast<std::int64_t>(n_cr_year.size());
  std::vector<RpySpectrumRow> out;
  out.reserve(n_cr_year.size());
  std::vector<std::uint64_t> window;
  for (std::int64_t i = 0; i < len; ++i) {
    const std::int64_t lo = std::max<std::int64_t>(0, i - median_range);
    const std::int64_t hi = std::min<std::int64_t>(len - 1, i + median_range);
    window.assign(n_cr_year.begin() + lo, n_cr_year.begin() + hi + 1);
    std::sort(window.begin(), window.end());
    const std::size_t w = window.size();
    // twice the median, so even windows stay exact
    const std::uint64_t median2 = (w % 2) ? 2 * window[w / 2] : window[w / 2 - 1] + window[w / 2];
    const auto x = static_cast<std::int64_t>(n_cr_year[static_cast<std::size_t>(i)]);
    out.push_back(RpySpectrumRow{first_rpy + static_cast<int>(i), n_cr_year[static_cast<std::size_t>(i)],
                                 Fraction(2 * x - static_cast<std::int64_t>(median2), 2)});
  }
  return out;
}

std::vector<RpySpectrumRow> rpys_spectrum(const CitationMatrix& matrix, int median_range) {
  std::optional<int> lo;
  std::optional<int> hi;
  for (const MergedCR& m : matrix.rows()) {
    if (!m.rpy) continue;
    lo = lo ? std::min(*lo, *m.rpy) : *m.rpy;
    hi = hi ? std::max(*hi, *m.rpy) : *m.rpy;
  }
  if (!lo) return {};
  std::vector<std::uint64_t> series(static_cast<std::size_t>(*hi - *lo + 1), 0);
  for (const MergedCR& m : matrix.rows()) {
    if (m.rpy) series[static_cast<std::size_t>(*m.rpy - *lo)] += m.n_cr;
  }
  return rpys_spectrum(*lo, series, median_range);
}

}  // namespace rpys
