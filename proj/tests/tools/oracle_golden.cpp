// Produces the expected CSV for a fixture with the brute-force oracle
// pipeline (all-pairs clustering, full-sort indicators).
//   oracle_golden FIXTURE.txt OUT.csv [MIN_INDICATOR]

#include <fstream>
#include <iostream>
#include <string>

#include "oracle.hpp"

int main(int argc, char** argv) {
  if (argc < 3 || argc > 4) {
    std::cerr << "usage: oracle_golden FIXTURE.txt OUT.csv [MIN_INDICATOR]\n";
    return 2;
  }
  rpys::PipelineConfig cfg;
  cfg.min_indicator = argc == 4 ? std::stoull(argv[3]) : 3;

  std::ifstream in(argv[1], std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << argv[1] << '\n';
    return 4;
  }
  rpys::WosParseOptions opts;
  opts.py_window = cfg.py_window;
  const auto records = rpys::parse_wos_stream(in, opts);

  std::ofstream out(argv[2], std::ios::binary);
  out << rpys::oracle::pipeline_csv(records, cfg);
  std::cerr << records.size() << " records\n";
  return out ? 0 : 4;
}
