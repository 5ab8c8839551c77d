#include "rpys/wos.hpp"

#include <istream>
#include <ostream>

#include "rpys/error.hpp"
#include "rpys/utf8.hpp"

namespace rpys {
namespace {

bool iequals(std::string_view a, std::string_view b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char x = a[i];
    char y = b[i];
    if (x >= 'a' && x <= 'z') x = static_cast<char>(x - 'a' + 'A');
    if (y >= 'a' && y <= 'z') y = static_cast<char>(y - 'a' + 'A');
    if (x != y) return false;
  }
  return true;
}

}  // namespace

void ImportWindow::validate() const {
  if (min_year > max_year) {
    throw ConfigError("year window [" + std::to_string(min_year) + ", " + std::to_string(max_year) +
                      "] has min > max");
  }
}

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<int> parse_year(std::string_view text) noexcept {
  text = trim(text);
  if (text.size() != 4) return std::nullopt;
  int year = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    year = year * 10 + (c - '0');
  }
  return year;
}

WosParser::WosParser(std::istream& in, WosParseOptions options)
    : in_(in), options_(std::move(options)) {
  options_.py_window.validate();
}

bool WosParser::read_line() {
  line_offset_ = stats_.bytes_read;
  if (!std::getline(in_, line_)) {
    if (in_.bad()) throw IoError("read failure", stats_.bytes_read);
    return false;
  }
  stats_.bytes_read += line_.size() + (in_.eof() ? 0 : 1);
  if (first_line_) {
    first_line_ = false;
    if (line_.starts_with("\xEF\xBB\xBF")) line_.erase(0, 3);
  }
  if (!line_.empty() && line_.back() == '\r') line_.pop_back();
  if (!utf8::is_valid(line_)) {
    line_ = utf8::sanitize(line_);
    ++stats_.lines_repaired;
  }
  return true;
}

void WosParser::start_record() {
  in_record_ = true;
  current_tag_ = Tag::none;
  record_offset_ = line_offset_;
  py_.clear();
  ut_.clear();
  dt_.reset();
  refs_.clear();
}

void WosParser::drop_open_record() {
  if (!in_record_) return;
  in_record_ = false;
  ++stats_.broken_records;
  refs_.clear();
}

bool WosParser::finish_record(SourceRecord& out) {
  in_record_ = false;
  ++stats_.records_seen;

  const std::optional<int> year = parse_year(py_);
  if (!options_.py_window.admits(year)) {
    ++stats_.records_out_of_window;
    return false;
  }
  if (options_.doc_type_filter && (!dt_ || !iequals(trim(*dt_), trim(*options_.doc_type_filter)))) {
    ++stats_.records_wrong_doc_type;
    return false;
  }

  ++stats_.records_admitted;
  out.record_id = ut_.empty() ? options_.source_name + ":" + std::to_string(record_offset_) : ut_;
  out.citing_year = year;
  out.doc_type = dt_;
  out.cited_refs = std::move(refs_);
  refs_.clear();
  return true;
}

std::optional<SourceRecord> WosParser::next() {
  while (!done_) {
    if (!read_line()) {
      drop_open_record();
      done_ = true;
      break;
    }
    if (line_.empty()) continue;

    if (line_.front() == ' ') {
      if (in_record_ && current_tag_ == Tag::cr) {
        const std::string_view value = trim(line_);
        if (!value.empty() && (options_.max_cr == 0 || refs_.size() < options_.max_cr)) {
          refs_.emplace_back(value);
        }
      }
      continue;
    }

    if (line_.size() > 2 && line_[2] != ' ') {
      // Not a tag line; treat as an unknown field so stray continuations are ignored.
      current_tag_ = Tag::other;
      continue;
    }
    const std::string_view tag = std::string_view(line_).substr(0, 2);
    const std::string_view value = line_.size() > 3 ? trim(std::string_view(line_).substr(3)) : std::string_view{};

    if (tag == "PT") {
      drop_open_record();
      start_record();
      continue;
    }
    if (tag == "EF") {
      drop_open_record();
      done_ = true;
      break;
    }
    if (!in_record_) continue;
    if (tag == "ER") {
      SourceRecord rec;
      if (finish_record(rec)) return rec;
      continue;
    }

    if (tag == "CR") {
      current_tag_ = Tag::cr;
      if (!value.empty() && (options_.max_cr == 0 || refs_.size() < options_.max_cr)) {
        refs_.emplace_back(value);
      }
    } else if (tag == "PY") {
      current_tag_ = Tag::py;
      py_.assign(value);
    } else if (tag == "DT") {
      current_tag_ = Tag::dt;
      dt_.emplace(value);
    } else if (tag == "UT") {
      current_tag_ = Tag::ut;
      ut_.assign(value);
    } else {
      current_tag_ = Tag::other;
    }
  }
  return std::nullopt;
}

std::vector<SourceRecord> parse_wos_stream(std::istream& in, const WosParseOptions& options,
                                           WosParseStats* stats) {
  WosParser parser(in, options);
  std::vector<SourceRecord> out;
  while (auto rec = parser.next()) out.push_back(std::move(*rec));
  if (stats) *stats = parser.stats();
  return out;
}

void write_wos_header(std::ostream& out) {
  out << "FN Clarivate Analytics Web of Science\nVR 1.0\n";
}

void write_wos_record(std::ostream& out, const SourceRecord& record) {
  out << "PT J\n";
  if (record.doc_type) out << "DT " << *record.doc_type << '\n';
  for (std::size_t i = 0; i < record.cited_refs.size(); ++i) {
    out << (i == 0 ? "CR " : "   ") << record.cited_refs[i] << '\n';
  }
  if (record.citing_year) out << "PY " << *record.citing_year << '\n';
  out << "UT " << record.record_id << '\n';
  out << "ER\n\n";
}

void write_wos_footer(std::ostream& out) { out << "EF\n"; }

}  // namespace rpys
