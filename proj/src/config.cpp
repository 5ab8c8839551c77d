#include "rpys/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "rpys/error.hpp"

namespace rpys {
namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    parts.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("invalid integer for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string v = upper(trim(text));
  if (v == "TRUE" || v == "YES" || v == "1" || v == "ON") return true;
  if (v == "FALSE" || v == "NO" || v == "0" || v == "OFF") return false;
  throw ConfigError("invalid boolean for " + std::string(key) + ": '" + std::string(text) + "'");
}

// "[1900, 2015, false]", brackets optional, third element optional.
ImportWindow parse_window(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text.starts_with('[') && text.ends_with(']')) text = trim(text.substr(1, text.size() - 2));
  const auto parts = split_commas(text);
  if (parts.size() != 2 && parts.size() != 3) {
    throw ConfigError("invalid window for " + std::string(key) + ": expected [min, max, include_missing]");
  }
  ImportWindow w{parse_int<int>(key, parts[0]), parse_int<int>(key, parts[1]),
                 parts.size() == 3 && parse_bool(key, parts[2])};
  w.validate();
  return w;
}

std::string format_window(const ImportWindow& w) {
  return "[" + std::to_string(w.min_year) + ", " + std::to_string(w.max_year) + ", " +
         (w.include_missing_year ? "true" : "false") + "]";
}

Fraction parse_fraction(std::string_view key, std::string_view text) {
  try {
    return Fraction::parse(text);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

const char* column_name(SortColumn c) {
  switch (c) {
    case SortColumn::n_top: return "N_TOP";
    case SortColumn::n_cr: return "N_CR";
    case SortColumn::rpy: return "RPY";
    case SortColumn::cr: return "CR";
  }
  return "?";
}

}  // namespace

std::vector<SortKey> parse_sort_keys(std::string_view text) {
  std::vector<SortKey> keys;
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) return keys;
  for (std::string_view part : split_commas(text)) {
    if (part.size() >= 2 && part.front() == '"' && part.back() == '"') part = trim(part.substr(1, part.size() - 2));
    const std::size_t space = part.find_first_of(" \t");
    const std::string name = upper(part.substr(0, space));
    const std::string dir = space == std::string_view::npos ? "ASC" : upper(trim(part.substr(space)));
    SortKey key;
    if (name == "N_TOP" || name == "N_TOP0_1+" || name == "N_TOPO_1_PLUS" || name == "N_TOP0_1_PLUS") {
      key.column = SortColumn::n_top;
    } else if (name == "N_CR") {
      key.column = SortColumn::n_cr;
    } else if (name == "RPY") {
      key.column = SortColumn::rpy;
    } else if (name == "CR") {
      key.column = SortColumn::cr;
    } else {
      throw ConfigError("unknown sort column '" + std::string(part.substr(0, space)) + "'");
    }
    if (dir == "ASC") {
      key.descending = false;
    } else if (dir == "DESC") {
      key.descending = true;
    } else {
      throw ConfigError("unknown sort direction '" + dir + "'");
    }
    keys.push_back(key);
  }
  return keys;
}

std::string format_sort_keys(const std::vector<SortKey>& keys) {
  std::string out;
  for (const SortKey& k : keys) {
    if (!out.empty()) out += ", ";
    out += column_name(k.column);
    out += k.descending ? " DESC" : " ASC";
  }
  return out;
}

void PipelineConfig::validate() const {
  py_window.validate();
  rpy_window.validate();
  cluster.validate();
  smoothing.validate();
  percentile_config().validate();
  if (linked_ratio_min < Fraction(0) || linked_ratio_min > Fraction(1)) {
    throw ConfigError("linked_ratio_min must lie in [0, 1]");
  }
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "input",          "out",           "py",           "rpy",          "max_cr",
      "doc_type",       "n_pct_range",   "median_range", "cluster.threshold",
      "cluster.volume", "cluster.page",  "cluster.doi",  "pct",          "filter.min_n_top",
      "sort",           "linked_ratio_min", "spectrum",  "p_comment"};
  return keys;
}

void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "input") {
    cfg.input_path.assign(value);
  } else if (key == "out") {
    cfg.output_path.assign(value);
  } else if (key == "py") {
    cfg.py_window = parse_window(key, value);
  } else if (key == "rpy") {
    cfg.rpy_window = parse_window(key, value);
  } else if (key == "max_cr") {
    cfg.max_cr = parse_int<std::size_t>(key, value);
  } else if (key == "doc_type") {
    if (value.empty()) {
      cfg.doc_type_filter.reset();
    } else {
      cfg.doc_type_filter.emplace(value);
    }
  } else if (key == "n_pct_range") {
    cfg.smoothing.n_pct_range = parse_int<int>(key, value);
  } else if (key == "median_range") {
    cfg.smoothing.median_range = parse_int<int>(key, value);
  } else if (key == "cluster.threshold") {
    cfg.cluster.threshold = parse_fraction(key, value);
  } else if (key == "cluster.volume") {
    cfg.cluster.require_volume = parse_bool(key, value);
  } else if (key == "cluster.page") {
    cfg.cluster.require_page = parse_bool(key, value);
  } else if (key == "cluster.doi") {
    cfg.cluster.require_doi = parse_bool(key, value);
  } else if (key == "pct") {
    cfg.percentile = parse_fraction(key, value);
  } else if (key == "filter.min_n_top") {
    cfg.min_indicator = parse_int<std::uint64_t>(key, value);
  } else if (key == "sort") {
    cfg.sort_keys = parse_sort_keys(value);
  } else if (key == "linked_ratio_min") {
    cfg.linked_ratio_min = parse_fraction(key, value);
  } else if (key == "spectrum") {
    cfg.export_spectrum = parse_bool(key, value);
  } else if (key == "p_comment") {
    cfg.p_comment = parse_bool(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

PipelineConfig load_config(std::istream& in, PipelineConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    try {
      apply_setting(base, trim(view.substr(0, eq)), view.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  base.validate();
  return base;
}

PipelineConfig load_config_file(const std::string& path, PipelineConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  return load_config(in, std::move(base));
}

void save_config(std::ostream& out, const PipelineConfig& cfg) {
  out << "input = " << cfg.input_path << '\n'
      << "out = " << cfg.output_path << '\n'
      << "py = " << format_window(cfg.py_window) << '\n'
      << "rpy = " << format_window(cfg.rpy_window) << '\n'
      << "max_cr = " << cfg.max_cr << '\n'
      << "doc_type = " << cfg.doc_type_filter.value_or("") << '\n'
      << "n_pct_range = " << cfg.smoothing.n_pct_range << '\n'
      << "median_range = " << cfg.smoothing.median_range << '\n'
      << "cluster.threshold = " << cfg.cluster.threshold.to_string() << '\n'
      << "cluster.volume = " << (cfg.cluster.require_volume ? "true" : "false") << '\n'
      << "cluster.page = " << (cfg.cluster.require_page ? "true" : "false") << '\n'
      << "cluster.doi = " << (cfg.cluster.require_doi ? "true" : "false") << '\n'
      << "pct = " << cfg.percentile.to_string() << '\n'
      << "filter.min_n_top = " << cfg.min_indicator << '\n'
      << "sort = " << format_sort_keys(cfg.sort_keys) << '\n'
      << "linked_ratio_min = " << cfg.linked_ratio_min.to_string() << '\n'
      << "spectrum = " << (cfg.export_spectrum ? "true" : "false") << '\n'
      << "p_comment = " << (cfg.p_comment ? "true" : "false") << '\n';
}

}  // namespace rpys
