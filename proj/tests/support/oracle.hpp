#pragma once

// Independent reference computations. Nothing here calls the production
// kernels it is used to check: distances come from a full-matrix DP,
// closures from BFS, thresholds and means from exact big rationals, and
// every per-year quantity from a full sort.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rpys/cited_ref.hpp"
#include "rpys/config.hpp"
#include "rpys/dedup.hpp"
#include "rpys/matrix.hpp"
#include "rpys/wos.hpp"

namespace rpys::oracle {

using Rational = boost::multiprecision::cpp_rational;

Rational to_rational(const Fraction& f);

/// Textbook (n+1) x (m+1) edit-distance table over code points.
std::size_t textbook_levenshtein(const std::u32string& a, const std::u32string& b);

/// Comparison string built from scratch (uppercase, collapsed blanks).
std::u32string key_of(const CitedRefVariant& v);

/// similarity >= threshold and the field gates, evaluated literally.
bool literal_match(const CitedRefVariant& a, const CitedRefVariant& b, const ClusterConfig& cfg);

/// All-pairs graph + BFS components, returned as sorted sets of raw strings.
std::set<std::set<std::string>> brute_partition(const std::vector<CitedRefVariant>& variants, const ClusterConfig& cfg);

/// Same shape from a production Partition, for comparison.
std::set<std::set<std::string>> partition_sets(const Partition& partition);

/// floor(1 + n p) computed with big rationals.
std::uint64_t rank_of(std::uint64_t n, const Fraction& p);

struct Row {
  std::string cr;
  std::optional<int> rpy;
  std::map<int, std::uint64_t> counts;
};

std::vector<Row> rows_of(const std::vector<MergedCR>& merged);

/// Per citing year of `years`: the set of row indices that are top, sorting
/// every windowed count and applying "count > c" and "count > mean" literally.
std::vector<std::set<std::size_t>> top_sets(const std::vector<Row>& rows, YearRange years, const Fraction& p, int r);

std::vector<std::uint64_t> n_top(const std::vector<Row>& rows, YearRange years, const Fraction& p, int r);

/// Direct sliding-median deviation of a series (window clipped at the ends).
std::vector<Rational> sliding_median_dev(const std::vector<std::uint64_t>& series, int m);

/// Whole pipeline on parsed records using only oracle pieces, returning the
/// CSV bytes the tool is expected to write (default sort keys).
std::string pipeline_csv(const std::vector<SourceRecord>& records, const PipelineConfig& cfg);

/// Minimal RFC 4180 reader used to check exported files.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace rpys::oracle
