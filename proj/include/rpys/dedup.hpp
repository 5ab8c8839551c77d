#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rpys/cited_ref.hpp"
#include "rpys/fraction.hpp"
#include "rpys/parallel.hpp"
#include "rpys/year_counts.hpp"

namespace rpys {

struct ClusterConfig {
  Fraction threshold{3, 4};
  bool require_volume = true;
  bool require_page = true;
  bool require_doi = false;

  void validate() const;

  friend bool operator==(const ClusterConfig&, const ClusterConfig&) = default;
};

/// Canonical cited reference produced by merging one cluster of variants.
struct MergedCR {
  std::string canonical_raw;
  std::optional<int> rpy;
  std::uint64_t member_count = 0;
  std::uint64_t n_cr = 0;
  YearCounts counts_by_year;

  friend bool operator==(const MergedCR&, const MergedCR&) = default;
};

/// A cluster holds its members sorted by raw string.
struct Cluster {
  std::optional<int> rpy;
  std::vector<CitedRefVariant> members;
};

/// Clusters ordered by (rpy, smallest member raw); undated block first.
using Partition = std::vector<Cluster>;

/// String the similarity is measured on: author and source joined by a
/// space, ASCII-uppercased, whitespace runs collapsed to one blank and
/// trimmed. Volume, page and DOI live in their own fields and never enter
/// the key.
std::string comparison_key(const CitedRefVariant& v);

/// 1 - levenshtein(key(a), key(b)) / max(|key(a)|, |key(b)|), with lengths
/// in code points. Two empty keys are identical (1.0).
double similarity(const CitedRefVariant& a, const CitedRefVariant& b);

/// Largest edit distance that still reaches `threshold` for keys whose
/// longer length is `max_len`: floor(max_len * (1 - threshold)).
std::size_t max_edit_distance(std::size_t max_len, const Fraction& threshold);

/// similarity >= threshold (decided in exact arithmetic) and every enabled
/// field gate holds. A gate fails only when both values are present and differ.
bool pair_matches(const CitedRefVariant& a, const CitedRefVariant& b, const ClusterConfig& cfg);

/// Blocks by rpy, links pair_matches within each block and returns the
/// connected components. The result does not depend on input order.
Partition cluster(std::vector<CitedRefVariant> variants, const ClusterConfig& cfg,
                  Exec exec = Exec::parallel);

/// Member with the largest total count becomes canonical (ties: smallest
/// raw string); year counts are summed element-wise.
std::vector<MergedCR> merge(const Partition& partition);

/// Re-expresses merged output as variants (canonical string re-parsed) so
/// it can be clustered again.
std::vector<CitedRefVariant> as_variants(std::span<const MergedCR> merged);

/// Audit dump: one "rpy<TAB>member_count<TAB>canonical_raw" line per cluster.
void write_cluster_dump(std::ostream& out, std::span<const MergedCR> merged);

namespace kernels {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Match edges (i < j, sorted) between variants that share an rpy.
/// The serial version compares every same-rpy pair with pair_matches.
/// The parallel version sorts each block by key length, skips pairs whose
/// length difference alone rules out the threshold, uses a banded distance
/// with early exit, and splits rows across OpenMP threads. Both return the
/// same edge set.
std::vector<Edge> match_edges_serial(std::span<const CitedRefVariant> variants, const ClusterConfig& cfg);
std::vector<Edge> match_edges_parallel(std::span<const CitedRefVariant> variants, const ClusterConfig& cfg);

}  // namespace kernels
}  // namespace rpys
