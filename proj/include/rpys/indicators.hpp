#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rpys/fraction.hpp"
#include "rpys/matrix.hpp"
#include "rpys/parallel.hpp"

namespace rpys {

struct PercentileConfig {
  Fraction p{1, 1000};  // top share: 0.001 for N_TOP0_1+
  int n_pct_range = 2;

  void validate() const;

  friend bool operator==(const PercentileConfig&, const PercentileConfig&) = default;
};

struct IndicatorRow {
  std::string cr;
  std::optional<int> rpy;
  std::uint64_t n_cr = 0;
  std::uint64_t n_top = 0;

  friend bool operator==(const IndicatorRow&, const IndicatorRow&) = default;
};

struct RpySpectrumRow {
  int rpy = 0;
  std::uint64_t n_cr_year = 0;
  Fraction median_dev;  // integral, or a half when the median window has even length

  friend bool operator==(const RpySpectrumRow&, const RpySpectrumRow&) = default;
};

/// floor(1 + n * p): 1-based rank into the descending count list.
std::uint64_t threshold_rank(std::uint64_t n, const Fraction& p);

/// Count at rank threshold_rank(n, p) among the positive windowed counts of
/// `year`. nullopt when the window holds no citations.
std::optional<std::uint64_t> threshold_count(const CitationMatrix& matrix, int year, const PercentileConfig& cfg);

/// Mean windowed count total / n of the year's population; nullopt when n = 0.
std::optional<Fraction> expected_count(const CitationMatrix& matrix, int year, const PercentileConfig& cfg);

/// windowed count > threshold_count and > expected_count.
bool is_top(const CitationMatrix& matrix, std::size_t row, int year, const PercentileConfig& cfg);

/// Number of years in `range` for which is_top holds.
std::uint64_t n_top(const CitationMatrix& matrix, std::size_t row, const PercentileConfig& cfg, YearRange range);

/// RPYS spectrum over every reference year between the smallest and largest
/// dated row. Undated rows are not part of the spectrum.
std::vector<RpySpectrumRow> rpys_spectrum(const CitationMatrix& matrix, int median_range);

/// Spectrum of an already aggregated per-year series (first entry = `first_rpy`).
std::vector<RpySpectrumRow> rpys_spectrum(int first_rpy, const std::vector<std::uint64_t>& n_cr_year,
                                          int median_range);

namespace kernels {

/// Rows that are top in `year`, ascending. Single selection pass over the
/// windowed counts of every row.
std::vector<std::uint32_t> year_top_set(const CitationMatrix& matrix, int year, const PercentileConfig& cfg);

/// n_top for every row over `range`. The parallel version distributes
/// citing years across OpenMP threads and reduces per-thread tallies.
std::vector<std::uint64_t> n_top_all_serial(const CitationMatrix& matrix, const PercentileConfig& cfg, YearRange range);
std::vector<std::uint64_t> n_top_all_parallel(const CitationMatrix& matrix, const PercentileConfig& cfg,
                                              YearRange range);

}  // namespace kernels

/// One IndicatorRow per matrix row (same order).
std::vector<IndicatorRow> indicator_rows(const CitationMatrix& matrix, const PercentileConfig& cfg, YearRange range,
                                         Exec exec = Exec::parallel);

}  // namespace rpys
