// rpys: landmark cited-reference detection from Web of Science exports.
//
//   rpys run --config FILE [--input F --out F --min-indicator N --pct P --force ...]
//   rpys info --input F
//   rpys spectrum --input F --out F
//
// Every config-file key is also accepted as a flag of the same name
// (e.g. --cluster.threshold 0.8, --rpy "[1900, 2015, false]").

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rpys/config.hpp"
#include "rpys/pipeline.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::map<std::string, std::string> settings;
};

void add_setting_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "flat key = value config file");
  for (const std::string& key : rpys::config_keys()) {
    cmd->add_option_function<std::string>(
        "--" + key, [&args, key](const std::string& v) { args.settings[key] = v; }, "config key '" + key + "'");
  }
}

rpys::PipelineConfig resolve(const CommonArgs& args) {
  rpys::PipelineConfig cfg;
  if (!args.config_path.empty()) cfg = rpys::load_config_file(args.config_path);
  for (const auto& [key, value] : args.settings) rpys::apply_setting(cfg, key, value);
  cfg.validate();
  return cfg;
}

template <typename Fn>
int with_config(const CommonArgs& args, Fn&& fn) {
  rpys::PipelineConfig cfg;
  try {
    cfg = resolve(args);
  } catch (const rpys::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rpys::kExitIo;
  } catch (const rpys::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rpys::kExitUsage;
  }
  return fn(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  rpys::configure_threads_from_env();

  CLI::App app{"Landmark cited-reference detection (RPYS, N_TOP indicators) for Web of Science exports"};
  app.require_subcommand(1);

  CommonArgs run_args;
  rpys::RunOptions run_opts;
  bool serial = false;
  auto* run = app.add_subcommand("run", "ingest, cluster, merge, score and export the indicator CSV");
  add_setting_flags(run, run_args);
  run->add_option_function<std::string>(
      "--min-indicator", [&](const std::string& v) { run_args.settings["filter.min_n_top"] = v; },
      "minimum N_TOP for exported rows (filter.min_n_top)");
  run->add_flag("--force", run_opts.force, "continue with a warning when the linked-ratio gate fails");
  run->add_option("--dump-clusters", run_opts.cluster_dump_path, "write one line per merged cluster for auditing");
  run->add_flag("--serial", serial, "use the serial reference kernels");

  CommonArgs info_args;
  auto* info = app.add_subcommand("info", "print corpus statistics");
  add_setting_flags(info, info_args);

  CommonArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "write the RPYS spectrum CSV");
  add_setting_flags(spectrum, spectrum_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rpys::kExitUsage;
  }

  if (*run) {
    run_opts.exec = serial ? rpys::Exec::serial : rpys::Exec::parallel;
    return with_config(run_args, [&](const rpys::PipelineConfig& cfg) { return rpys::run(cfg, std::cerr, run_opts); });
  }
  if (*info) {
    return with_config(info_args, [&](const rpys::PipelineConfig& cfg) { return rpys::info(cfg, std::cout, std::cerr); });
  }
  return with_config(spectrum_args, [&](const rpys::PipelineConfig& cfg) { return rpys::spectrum(cfg, std::cerr); });
}
