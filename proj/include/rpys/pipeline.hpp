#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rpys/cited_ref.hpp"
#include "rpys/config.hpp"
#include "rpys/dedup.hpp"
#include "rpys/error.hpp"
#include "rpys/indicators.hpp"
#include "rpys/parallel.hpp"
#include "rpys/wos.hpp"

namespace rpys {

enum ExitCode : int {
  kExitOk = 0,
  kExitDataError = 1,
  kExitUsage = 2,
  kExitGate = 3,
  kExitIo = 4,
};

/// The linked-reference ratio of the corpus is below the configured minimum.
class GateError : public Error {
 public:
  GateError(LinkedRatio ratio, Fraction minimum);
  const LinkedRatio& ratio() const noexcept { return ratio_; }

 private:
  LinkedRatio ratio_;
};

struct IngestResult {
  std::vector<CitedRefVariant> variants;
  WosParseStats parse;
  VariantTableStats table;
  std::optional<int> first_citing_year;  // observed among dated admitted records
  std::optional<int> last_citing_year;
};

/// Streams records through the parser into a VariantTable; only the
/// aggregated table is retained.
IngestResult ingest(std::istream& in, const PipelineConfig& cfg, const std::string& source_name = "input");
IngestResult ingest_file(const PipelineConfig& cfg);

struct Analysis {
  LinkedRatio ratio;
  bool gate_bypassed = false;
  std::size_t variant_count = 0;
  std::vector<MergedCR> merged;
  std::vector<IndicatorRow> rows;  // filtered and sorted
  std::vector<RpySpectrumRow> spectrum;
};

/// gate -> cluster -> merge -> matrix -> indicators -> filter -> sort.
/// Throws GateError unless `force` is set.
Analysis analyze(std::vector<CitedRefVariant> variants, const PipelineConfig& cfg, bool force = false,
                 Exec exec = Exec::parallel);

/// Sorts by `keys`, then by the remaining default tie-breakers
/// (N_TOP desc, N_CR desc, RPY asc, CR asc) so the order is total.
void sort_rows(std::vector<IndicatorRow>& rows, const std::vector<SortKey>& keys);

/// Keeps rows with n_top >= min_indicator.
std::vector<IndicatorRow> filter_rows(std::vector<IndicatorRow> rows, std::uint64_t min_indicator);

/// Indicator CSV as a string, exactly as `run` writes it.
std::string render_csv(const Analysis& analysis, const PipelineConfig& cfg);

struct RunOptions {
  bool force = false;              // continue (with a warning) when the gate fails
  Exec exec = Exec::parallel;
  std::string cluster_dump_path;   // optional audit dump of the merged clusters
};

/// Whole pipeline for the CLI. Writes output files, prints the summary to
/// `log` and returns an ExitCode. Never throws.
int run(const PipelineConfig& cfg, std::ostream& log, const RunOptions& options = {});

/// Corpus statistics, one "key: value" line each.
int info(const PipelineConfig& cfg, std::ostream& out, std::ostream& log);

/// RPYS spectrum only (no clustering needed: clusters never span reference
/// years, so per-year sums are unaffected by merging).
int spectrum(const PipelineConfig& cfg, std::ostream& log);

}  // namespace rpys
