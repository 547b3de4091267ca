#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "csemit/pipeline.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::string formats;
};

void add_common(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--config", args->config_path, "run configuration file")
      ->required();
  cmd->add_option("--out", args->out_dir, "output directory override");
  cmd->add_option("--format", args->formats,
                  "output formats, comma separated (json,csv)");
}

csemit::RunConfig resolve_config(const CommonArgs& args) {
  csemit::RunConfig config = csemit::load_config(args.config_path);
  if (const char* env = std::getenv("CSEMIT_OUT")) config.out_dir = env;
  if (!args.out_dir.empty()) config.out_dir = args.out_dir;
  if (!args.formats.empty()) {
    config.write_json = false;
    config.write_csv = false;
    std::string item;
    for (std::size_t pos = 0; pos <= args.formats.size(); ++pos) {
      if (pos == args.formats.size() || args.formats[pos] == ',') {
        if (item == "json") config.write_json = true;
        else if (item == "csv") config.write_csv = true;
        else if (!item.empty()) {
          throw csemit::Error(csemit::ErrorCode::config_invalid,
                              "unknown output format: " + item);
        }
        item.clear();
      } else {
        item += args.formats[pos];
      }
    }
    if (!config.write_json && !config.write_csv) {
      throw csemit::Error(csemit::ErrorCode::config_invalid,
                          "--format selected no outputs");
    }
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "csemit: spontaneous-emission rates and radiative shifts of metastable "
      "resonance states via complex scaling"};
  app.require_subcommand(1);

  CommonArgs spectrum_args, rates_args, validate_args, scan_args;
  CLI::App* cmd_spectrum =
      app.add_subcommand("spectrum", "diagonalize and classify the spectrum");
  add_common(cmd_spectrum, &spectrum_args);
  CLI::App* cmd_rates = app.add_subcommand(
      "rates", "decay-rate and energy-shift breakdown for the initial state");
  add_common(cmd_rates, &rates_args);
  CLI::App* cmd_validate =
      app.add_subcommand("validate", "run the validation suite");
  add_common(cmd_validate, &validate_args);
  CLI::App* cmd_scan = app.add_subcommand(
      "scan-theta", "scan observables over the configured theta list");
  add_common(cmd_scan, &scan_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_spectrum->parsed()) {
      return csemit::run_spectrum(resolve_config(spectrum_args));
    }
    if (cmd_rates->parsed()) {
      return csemit::run_rates(resolve_config(rates_args));
    }
    if (cmd_validate->parsed()) {
      return csemit::run_validate(resolve_config(validate_args));
    }
    if (cmd_scan->parsed()) {
      return csemit::run_scan_theta(resolve_config(scan_args));
    }
  } catch (const csemit::Error& err) {
    std::fprintf(stderr, "csemit: %s (%s)\n", err.what(),
                 csemit::error_code_name(err.code()));
    return err.code() == csemit::ErrorCode::config_invalid ? 2 : 3;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "csemit: %s\n", err.what());
    return 3;
  }
  return 0;
}
