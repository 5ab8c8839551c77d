#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpys/dedup.hpp"
#include "rpys/fraction.hpp"
#include "rpys/indicators.hpp"
#include "rpys/matrix.hpp"
#include "rpys/wos.hpp"

namespace rpys {

enum class SortColumn { n_top, n_cr, rpy, cr };

struct SortKey {
  SortColumn column = SortColumn::n_top;
  bool descending = true;

  friend bool operator==(const SortKey&, const SortKey&) = default;
};

/// "N_TOP DESC, N_CR DESC". Column names: N_TOP (aliases N_TOP0_1+,
/// N_TOPO_1_Plus), N_CR, RPY, CR. Direction defaults to ASC.
std::vector<SortKey> parse_sort_keys(std::string_view text);
std::string format_sort_keys(const std::vector<SortKey>& keys);

/// Every setting of one pipeline run. Defaults reproduce the reference
/// landmark-detection script.
struct PipelineConfig {
  std::string input_path;
  std::string output_path;
  ImportWindow py_window{1980, 2017, false};
  ImportWindow rpy_window{1900, 2015, false};
  std::size_t max_cr = 0;
  std::optional<std::string> doc_type_filter;
  ClusterConfig cluster;
  SmoothingConfig smoothing;
  Fraction percentile{1, 1000};
  std::uint64_t min_indicator = 10;
  std::vector<SortKey> sort_keys{{SortColumn::n_top, true}, {SortColumn::n_cr, true}};
  Fraction linked_ratio_min{3, 10};
  bool export_spectrum = false;
  bool p_comment = false;

  void validate() const;

  YearRange citing_years() const noexcept { return {py_window.min_year, py_window.max_year}; }
  PercentileConfig percentile_config() const noexcept { return {percentile, smoothing.n_pct_range}; }

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

/// Keys accepted by the config file and by `apply_setting`, in file order.
const std::vector<std::string>& config_keys();

/// Sets one key from its textual value. Throws ConfigError for unknown keys
/// or malformed values.
void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value);

/// Flat "key = value" file; '#' starts a comment; blank lines ignored.
PipelineConfig load_config(std::istream& in, PipelineConfig base = {});
PipelineConfig load_config_file(const std::string& path, PipelineConfig base = {});

/// Writes every key so that load_config(save_config(c)) == c.
void save_config(std::ostream& out, const PipelineConfig& cfg);

}  // namespace rpys
