#include "rpys/cited_ref.hpp"

#include "rpys/error.hpp"

namespace rpys {
namespace {

bool has_prefix_ci(std::string_view s, std::string_view prefix) noexcept {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = s[i];
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    if (c != prefix[i]) return false;
  }
  return true;
}

// "V32" -> "32"; a bare "V" or "V 32 extra" is not a tagged segment.
std::optional<std::string> tagged_token(std::string_view seg, char tag) {
  if (seg.size() < 2 || seg[0] != tag) return std::nullopt;
  const std::string_view token = seg.substr(1);
  if (token.find(' ') != std::string_view::npos) return std::nullopt;
  return std::string(token);
}

}  // namespace

std::optional<CitedRefVariant> parse_cr(std::string_view raw, const ImportWindow& rpy_window) {
  std::vector<std::string_view> segments;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = raw.find(',', start);
    segments.push_back(trim(raw.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }

  CitedRefVariant v;
  v.raw.assign(raw);
  v.author.assign(segments[0]);

  for (std::size_t i = 1; i < segments.size(); ++i) {
    if (auto y = parse_year(segments[i])) {
      v.rpy = y;
      break;
    }
  }
  if (!rpy_window.admits(v.rpy)) return std::nullopt;

  std::size_t source_at = segments.size();
  for (std::size_t i = 1; i < segments.size(); ++i) {
    if (!segments[i].empty() && !parse_year(segments[i])) {
      source_at = i;
      v.source.assign(segments[i]);
      break;
    }
  }

  for (std::size_t i = source_at + 1; i < segments.size(); ++i) {
    const std::string_view seg = segments[i];
    if (has_prefix_ci(seg, "DOI ")) {
      if (!v.doi) {
        const std::string_view id = trim(seg.substr(4));
        if (!id.empty()) v.doi.emplace(id);
      }
    } else if (auto vol = tagged_token(seg, 'V')) {
      if (!v.volume) v.volume = std::move(vol);
    } else if (auto page = tagged_token(seg, 'P')) {
      if (!v.page) v.page = std::move(page);
    }
  }
  return v;
}

bool default_linked(const CitedRefVariant& v) noexcept {
  return v.doi.has_value() || (v.rpy.has_value() && v.volume.has_value() && v.page.has_value());
}

LinkedRatio linked_ratio(std::span<const CitedRefVariant> variants, const LinkedPredicate& predicate) {
  LinkedRatio ratio;
  for (const auto& v : variants) {
    const std::uint64_t n = v.total_count();
    ratio.total += n;
    if (n && predicate(v)) ratio.linked += n;
  }
  if (ratio.total == 0) throw DataError("no cited references");
  return ratio;
}

VariantTable::VariantTable(ImportWindow rpy_window) : rpy_window_(rpy_window) {
  rpy_window_.validate();
}

void VariantTable::add(const SourceRecord& record) {
  if (!record.citing_year) {
    ++stats_.undated_records;
    return;
  }
  const int year = *record.citing_year;
  for (const std::string& raw : record.cited_refs) {
    if (auto it = index_.find(raw); it != index_.end()) {
      variants_[it->second].add_occurrence(year);
      ++stats_.occurrences_admitted;
      continue;
    }
    auto parsed = parse_cr(raw, rpy_window_);
    if (!parsed) {
      ++stats_.occurrences_rejected;
      continue;
    }
    parsed->add_occurrence(year);
    variants_.push_back(std::move(*parsed));
    index_.emplace(variants_.back().raw, variants_.size() - 1);
    ++stats_.occurrences_admitted;
  }
}

std::size_t VariantTable::heap_bytes() const noexcept {
  auto str = [](const std::string& s) { return s.capacity() > 15 ? s.capacity() + 1 : 0; };
  std::size_t bytes = variants_.size() * sizeof(CitedRefVariant);
  for (const auto& v : variants_) {
    bytes += str(v.raw) + str(v.author) + str(v.source) + v.counts_by_year.heap_bytes();
    if (v.volume) bytes += str(*v.volume);
    if (v.page) bytes += str(*v.page);
    if (v.doi) bytes += str(*v.doi);
  }
  bytes += index_.bucket_count() * sizeof(void*) +
           index_.size() * (sizeof(std::pair<const std::string_view, std::size_t>) + 2 * sizeof(void*));
  return bytes;
}

std::vector<CitedRefVariant> VariantTable::take() {
  index_.clear();
  std::vector<CitedRefVariant> out;
  out.reserve(variants_.size());
  for (auto& v : variants_) out.push_back(std::move(v));
  variants_.clear();
  return out;
}

}  // namespace rpys
