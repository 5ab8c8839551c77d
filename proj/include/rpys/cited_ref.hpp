#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rpys/fraction.hpp"
#include "rpys/wos.hpp"
#include "rpys/year_counts.hpp"

namespace rpys {

/// One distinct cited-reference string and the citing years it occurs in.
struct CitedRefVariant {
  std::string raw;
  std::string author;
  std::optional<int> rpy;
  std::string source;
  std::optional<std::string> volume;  // without the leading "V"
  std::optional<std::string> page;    // without the leading "P"
  std::optional<std::string> doi;     // without the leading "DOI "
  YearCounts counts_by_year;

  std::uint64_t total_count() const noexcept { return counts_by_year.total(); }
  void add_occurrence(int citing_year, std::uint64_t n = 1) { counts_by_year.add(citing_year, n); }

  friend bool operator==(const CitedRefVariant&, const CitedRefVariant&) = default;
};

/// Splits a CR line "AUTHOR, YEAR, SOURCE[, Vxx][, Pxx][, DOI xx]".
///
/// author is the first segment; rpy is the first later segment made of
/// exactly four digits; source is the first later non-empty segment that is
/// not a year; V/P/DOI segments are recognised only after the source.
/// Returns nullopt only when the reference year is rejected by `rpy_window`.
std::optional<CitedRefVariant> parse_cr(std::string_view raw, const ImportWindow& rpy_window);

using LinkedPredicate = std::function<bool(const CitedRefVariant&)>;

/// Has a DOI, or has a year, a volume and a page.
bool default_linked(const CitedRefVariant& v) noexcept;

/// Occurrence-weighted share of references that satisfy a linkedness
/// predicate. Kept as two integers so the gate comparison is exact.
struct LinkedRatio {
  std::uint64_t linked = 0;
  std::uint64_t total = 0;

  double value() const noexcept { return total ? static_cast<double>(linked) / static_cast<double>(total) : 0.0; }
  bool at_least(const Fraction& minimum) const noexcept {
    return static_cast<__int128>(linked) * minimum.den() >= static_cast<__int128>(minimum.num()) * total;
  }
};

/// Throws DataError("no cited references") when there are no occurrences.
LinkedRatio linked_ratio(std::span<const CitedRefVariant> variants,
                         const LinkedPredicate& predicate = default_linked);

struct VariantTableStats {
  std::uint64_t occurrences_admitted = 0;
  std::uint64_t occurrences_rejected = 0;   // reference year outside the RPY window
  std::uint64_t undated_records = 0;        // admitted records without PY; their refs are not counted
};

/// Aggregates the CR occurrences of a record stream into distinct variants.
/// Each distinct raw string is parsed once; later occurrences only bump the
/// per-year count.
class VariantTable {
 public:
  explicit VariantTable(ImportWindow rpy_window);

  VariantTable(const VariantTable&) = delete;
  VariantTable& operator=(const VariantTable&) = delete;

  void add(const SourceRecord& record);

  std::size_t size() const noexcept { return variants_.size(); }
  const VariantTableStats& stats() const noexcept { return stats_; }

  /// Approximate heap footprint of the table (strings, year vectors, index).
  std::size_t heap_bytes() const noexcept;

  /// Moves the variants out in first-seen order and clears the table.
  std::vector<CitedRefVariant> take();

 private:
  ImportWindow rpy_window_;
  VariantTableStats stats_;
  std::deque<CitedRefVariant> variants_;                      // stable addresses for the index keys
  std::unordered_map<std::string_view, std::size_t> index_;   // views into variants_[i].raw
};

}  // namespace rpys
