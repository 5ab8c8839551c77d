#include "rpys/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rpys/csv.hpp"
#include "rpys/matrix.hpp"

namespace rpys {
namespace {

std::string format_ratio(const LinkedRatio& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", r.value());
  return buf;
}

int compare_column(const IndicatorRow& a, const IndicatorRow& b, SortColumn column) {
  auto cmp = [](const auto& x, const auto& y) { return x < y ? -1 : (y < x ? 1 : 0); };
  switch (column) {
    case SortColumn::n_top: return cmp(a.n_top, b.n_top);
    case SortColumn::n_cr: return cmp(a.n_cr, b.n_cr);
    case SortColumn::rpy: return cmp(a.rpy, b.rpy);  // undated sorts first
    case SortColumn::cr: return cmp(a.cr, b.cr);
  }
  return 0;
}

template <typename Fn>
int guarded(std::ostream& log, Fn&& body) {
  try {
    return body();
  } catch (const GateError& e) {
    log << "error: " << e.what() << '\n';
    return kExitGate;
  } catch (const IoError& e) {
    log << "error: " << e.what();
    if (e.offset()) log << " (at byte " << e.offset() << ')';
    log << '\n';
    return kExitIo;
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace

GateError::GateError(LinkedRatio ratio, Fraction minimum)
    : Error("linked reference ratio " + format_ratio(ratio) + " (" + std::to_string(ratio.linked) + "/" +
            std::to_string(ratio.total) + ") is below the minimum " + minimum.to_string()),
      ratio_(ratio) {}

IngestResult ingest(std::istream& in, const PipelineConfig& cfg, const std::string& source_name) {
  WosParseOptions opts;
  opts.py_window = cfg.py_window;
  opts.max_cr = cfg.max_cr;
  opts.doc_type_filter = cfg.doc_type_filter;
  opts.source_name = source_name;

  WosParser parser(in, opts);
  VariantTable table(cfg.rpy_window);
  IngestResult result;
  while (auto rec = parser.next()) {
    if (rec->citing_year) {
      const int y = *rec->citing_year;
      result.first_citing_year = result.first_citing_year ? std::min(*result.first_citing_year, y) : y;
      result.last_citing_year = result.last_citing_year ? std::max(*result.last_citing_year, y) : y;
    }
    table.add(*rec);
  }
  result.parse = parser.stats();
  result.table = table.stats();
  result.variants = table.take();
  return result;
}

IngestResult ingest_file(const PipelineConfig& cfg) {
  if (cfg.input_path.empty()) throw ConfigError("no input file given");
  std::vector<char> buffer(1 << 20);
  std::ifstream in;
  in.rdbuf()->pubsetbuf(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  in.open(cfg.input_path, std::ios::binary);
  if (!in) throw IoError("cannot open input '" + cfg.input_path + "'");
  return ingest(in, cfg, cfg.input_path);
}

void sort_rows(std::vector<IndicatorRow>& rows, const std::vector<SortKey>& keys) {
  std::vector<SortKey> full = keys;
  const SortKey defaults[] = {{SortColumn::n_top, true}, {SortColumn::n_cr, true},
                              {SortColumn::rpy, false}, {SortColumn::cr, false}};
  for (const SortKey& d : defaults) {
    const bool present =
        std::any_of(full.begin(), full.end(), [&](const SortKey& k) { return k.column == d.column; });
    if (!present) full.push_back(d);
  }
  std::sort(rows.begin(), rows.end(), [&](const IndicatorRow& a, const IndicatorRow& b) {
    for (const SortKey& k : full) {
      const int c = compare_column(a, b, k.column);
      if (c != 0) return k.descending ? c > 0 : c < 0;
    }
    return false;
  });
}

std::vector<IndicatorRow> filter_rows(std::vector<IndicatorRow> rows, std::uint64_t min_indicator) {
  std::erase_if(rows, [&](const IndicatorRow& r) { return r.n_top < min_indicator; });
  return rows;
}

Analysis analyze(std::vector<CitedRefVariant> variants, const PipelineConfig& cfg, bool force, Exec exec) {
  cfg.validate();
  Analysis a;
  a.ratio = linked_ratio(variants);
  if (!a.ratio.at_least(cfg.linked_ratio_min)) {
    if (!force) throw GateError(a.ratio, cfg.linked_ratio_min);
    a.gate_bypassed = true;
  }
  a.variant_count = variants.size();

  a.merged = merge(cluster(std::move(variants), cfg.cluster, exec));
  const CitationMatrix matrix = build_matrix(a.merged, cfg.citing_years());
  a.rows = filter_rows(indicator_rows(matrix, cfg.percentile_config(), cfg.citing_years(), exec), cfg.min_indicator);
  sort_rows(a.rows, cfg.sort_keys);
  if (cfg.export_spectrum) a.spectrum = rpys_spectrum(matrix, cfg.smoothing.median_range);
  return a;
}

std::string render_csv(const Analysis& analysis, const PipelineConfig& cfg) {
  std::ostringstream out;
  write_indicator_csv(out, analysis.rows, CsvOptions{cfg.p_comment, cfg.percentile});
  return out.str();
}

int run(const PipelineConfig& cfg, std::ostream& log, const RunOptions& options) {
  return guarded(log, [&] {
    cfg.validate();
    if (cfg.output_path.empty()) throw ConfigError("no output file given");
    IngestResult in = ingest_file(cfg);
    log << "records read: " << in.parse.records_admitted << '\n'
        << "records skipped: " << in.parse.records_skipped() << '\n';
    if (in.parse.broken_records) log << "warning: " << in.parse.broken_records << " unterminated record(s) dropped\n";

    Analysis a = analyze(std::move(in.variants), cfg, options.force, options.exec);
    if (a.gate_bypassed) {
      log << "warning: linked reference ratio " << format_ratio(a.ratio) << " is below "
          << cfg.linked_ratio_min.to_string() << "; continuing because of --force\n";
    }

    write_file_atomically(cfg.output_path, render_csv(a, cfg));
    if (cfg.export_spectrum) {
      std::ostringstream sp;
      write_spectrum_csv(sp, a.spectrum);
      write_file_atomically(spectrum_path(cfg.output_path), sp.str());
    }
    if (!options.cluster_dump_path.empty()) {
      std::ostringstream dump;
      write_cluster_dump(dump, a.merged);
      write_file_atomically(options.cluster_dump_path, dump.str());
    }

    log << "variants: " << a.variant_count << '\n'
        << "clusters: " << a.merged.size() << '\n'
        << "rows exported: " << a.rows.size() << '\n';
    if (a.rows.empty()) {
      log << "note: no cited reference reached N_TOP >= " << cfg.min_indicator
          << "; retry with a smaller --min-indicator\n";
    }
    return static_cast<int>(kExitOk);
  });
}

int info(const PipelineConfig& cfg, std::ostream& out, std::ostream& log) {
  return guarded(log, [&] {
    IngestResult in = ingest_file(cfg);
    if (in.parse.records_admitted == 0) throw DataError("no records");
    std::optional<int> rpy_lo;
    std::optional<int> rpy_hi;
    for (const auto& v : in.variants) {
      if (!v.rpy) continue;
      rpy_lo = rpy_lo ? std::min(*rpy_lo, *v.rpy) : *v.rpy;
      rpy_hi = rpy_hi ? std::max(*rpy_hi, *v.rpy) : *v.rpy;
    }
    auto span = [](std::optional<int> lo, std::optional<int> hi) {
      return lo ? std::to_string(*lo) + "-" + std::to_string(*hi) : std::string("none");
    };
    out << "records: " << in.parse.records_admitted << '\n'
        << "records_skipped: " << in.parse.records_skipped() << '\n'
        << "citing_years: " << span(in.first_citing_year, in.last_citing_year) << '\n'
        << "cr_occurrences: " << in.table.occurrences_admitted << '\n'
        << "distinct_variants: " << in.variants.size() << '\n'
        << "linked_ratio: " << format_ratio(linked_ratio(in.variants)) << '\n'
        << "rpy_span: " << span(rpy_lo, rpy_hi) << '\n';
    return static_cast<int>(kExitOk);
  });
}

int spectrum(const PipelineConfig& cfg, std::ostream& log) {
  return guarded(log, [&] {
    cfg.validate();
    if (cfg.output_path.empty()) throw ConfigError("no output file given");
    IngestResult in = ingest_file(cfg);
    std::vector<MergedCR> singletons;
    singletons.reserve(in.variants.size());
    for (auto& v : in.variants) {
      singletons.push_back(MergedCR{std::move(v.raw), v.rpy, 1, v.total_count(), std::move(v.counts_by_year)});
    }
    const CitationMatrix matrix = build_matrix(std::move(singletons), cfg.citing_years());
    std::ostringstream sp;
    write_spectrum_csv(sp, rpys_spectrum(matrix, cfg.smoothing.median_range));
    write_file_atomically(cfg.output_path, sp.str());
    log << "records read: " << in.parse.records_admitted << '\n';
    return static_cast<int>(kExitOk);
  });
}

}  // namespace rpys
