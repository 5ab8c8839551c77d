#include "rpys/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "rpys/error.hpp"

namespace rpys {

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out;
  out.reserve(value.size() + 2);
  out += '"';
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_indicator_csv(std::ostream& out, std::span<const IndicatorRow> rows, const CsvOptions& options) {
  if (options.p_comment) out << "# p=" << options.p.to_string() << '\n';
  out << "CR,RPY,N_CR,N_TOP0_1+\n";
  for (const IndicatorRow& row : rows) {
    out << csv_field(row.cr) << ',';
    if (row.rpy) out << *row.rpy;
    out << ',' << row.n_cr << ',' << row.n_top << '\n';
  }
}

void write_spectrum_csv(std::ostream& out, std::span<const RpySpectrumRow> rows) {
  out << "RPY,N_CR,MEDIAN_DEV\n";
  for (const RpySpectrumRow& row : rows) {
    out << row.rpy << ',' << row.n_cr_year << ',' << row.median_dev.to_string() << '\n';
  }
}

std::string spectrum_path(const std::string& csv_path) { return csv_path + ".rpys.csv"; }

void write_file_atomically(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::remove(tmp.c_str());
      throw IoError("write to '" + path + "' failed", content.size());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw IoError("cannot move output into place at '" + path + "': " + ec.message());
  }
}

}  // namespace rpys
