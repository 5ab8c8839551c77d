#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rpys {

/// Inclusive year window used for both citing years (PY) and reference
/// publication years (RPY). `include_missing_year` admits items whose year
/// is absent or unparseable.
struct ImportWindow {
  int min_year = 0;
  int max_year = 0;
  bool include_missing_year = false;

  void validate() const;
  bool admits(std::optional<int> year) const noexcept {
    if (!year) return include_missing_year;
    return *year >= min_year && *year <= max_year;
  }

  friend bool operator==(const ImportWindow&, const ImportWindow&) = default;
};

/// One citing paper from a tagged WoS export.
struct SourceRecord {
  std::string record_id;                 // UT, or "<source>:<byte offset>" when UT is absent
  std::optional<int> citing_year;        // PY
  std::vector<std::string> cited_refs;   // CR lines, file order, never empty strings
  std::optional<std::string> doc_type;   // DT

  friend bool operator==(const SourceRecord&, const SourceRecord&) = default;
};

struct WosParseOptions {
  ImportWindow py_window{1980, 2017, false};
  std::size_t max_cr = 0;                       // 0 = keep every reference
  std::optional<std::string> doc_type_filter;   // case-insensitive DT equality
  std::string source_name = "input";            // prefix of synthetic record ids
};

struct WosParseStats {
  std::uint64_t records_seen = 0;         // complete PT..ER blocks
  std::uint64_t records_admitted = 0;
  std::uint64_t records_out_of_window = 0;
  std::uint64_t records_wrong_doc_type = 0;
  std::uint64_t broken_records = 0;       // PT without a matching ER
  std::uint64_t bytes_read = 0;
  std::uint64_t lines_repaired = 0;       // lines that needed UTF-8 replacement

  std::uint64_t records_skipped() const noexcept {
    return records_out_of_window + records_wrong_doc_type + broken_records;
  }
};

/// Single-pass pull parser over a WoS plain-text ("tagged") export.
///
/// Records start at a "PT" line and end at "ER"; "EF" ends the file. Each
/// line is a two-character tag, a space and a value; lines starting with
/// three spaces continue the previous tag. Only PT, PY, DT, UT, CR, ER and
/// EF are interpreted. Memory use is bounded by the largest single record.
///
/// A record that is not closed by ER (another PT or EOF/EF comes first) is
/// dropped and counted in `broken_records`. Read failures throw IoError
/// carrying the byte offset reached.
class WosParser {
 public:
  WosParser(std::istream& in, WosParseOptions options);

  /// Next admitted record, or nullopt at end of input.
  std::optional<SourceRecord> next();

  const WosParseStats& stats() const noexcept { return stats_; }

 private:
  enum class Tag { none, other, cr, py, dt, ut };

  bool read_line();
  void start_record();
  bool finish_record(SourceRecord& out);
  void drop_open_record();

  std::istream& in_;
  WosParseOptions options_;
  WosParseStats stats_;

  std::string line_;
  std::uint64_t line_offset_ = 0;
  bool first_line_ = true;
  bool done_ = false;

  bool in_record_ = false;
  Tag current_tag_ = Tag::none;
  std::uint64_t record_offset_ = 0;
  std::string py_;
  std::string ut_;
  std::optional<std::string> dt_;
  std::vector<std::string> refs_;
};

/// Collects every admitted record. Convenience for tests and small inputs.
std::vector<SourceRecord> parse_wos_stream(std::istream& in, const WosParseOptions& options,
                                           WosParseStats* stats = nullptr);

/// Serialization back to the tagged format. The record id is always written
/// as UT so that re-parsing reproduces the record exactly.
void write_wos_header(std::ostream& out);
void write_wos_record(std::ostream& out, const SourceRecord& record);
void write_wos_footer(std::ostream& out);

/// Exactly four ASCII digits (surrounding blanks allowed) -> year.
std::optional<int> parse_year(std::string_view text) noexcept;

std::string_view trim(std::string_view s) noexcept;

}  // namespace rpys
