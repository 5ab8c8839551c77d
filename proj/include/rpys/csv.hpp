#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "rpys/fraction.hpp"
#include "rpys/indicators.hpp"

namespace rpys {

/// RFC 4180 field: quoted when it contains a comma, quote, CR or LF;
/// embedded quotes doubled.
std::string csv_field(std::string_view value);

struct CsvOptions {
  bool p_comment = false;  // emit "# p=<value>" before the header
  Fraction p{1, 1000};
};

/// Header "CR,RPY,N_CR,N_TOP0_1+", LF line endings, one LF after the last row.
void write_indicator_csv(std::ostream& out, std::span<const IndicatorRow> rows, const CsvOptions& options = {});

/// Header "RPY,N_CR,MEDIAN_DEV".
void write_spectrum_csv(std::ostream& out, std::span<const RpySpectrumRow> rows);

/// Path of the spectrum companion file: "<path>.rpys.csv".
std::string spectrum_path(const std::string& csv_path);

/// Writes `content` to `path` through a temporary sibling file that is
/// renamed into place. On failure the partial file is removed and IoError
/// is thrown.
void write_file_atomically(const std::string& path, std::string_view content);

}  // namespace rpys
