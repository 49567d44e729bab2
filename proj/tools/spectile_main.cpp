// Command line front end: analyze single sets, decide tiling, produce
// spectra, and drive corpus experiments.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spectile/experiment.hpp"
#include "spectile/report.hpp"

namespace {

struct CommonArgs {
  std::string set_text;
  long long period_bound = 0;
  long long denominator_cap = 1000000;
  bool json = false;
};

void add_set_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--set", args.set_text, "Comma separated non-negative integers")->required();
  cmd->add_flag("--json", args.json, "Emit the versioned JSON report");
}

int emit_report(const spectile::AnalysisReport& report, bool json) {
  if (json)
    std::cout << spectile::report_to_json(report);
  else
    std::cout << spectile::report_to_text(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tiling and spectral analysis of finite integer sets"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "INI file with [subcommand] sections; place before the "
                 "subcommand, explicit flags win");

  CommonArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "Full report for one set");
  add_set_options(analyze, analyze_args);
  analyze->add_option("--period-bound", analyze_args.period_bound,
                      "Largest tiling period to search");
  analyze->add_option("--denominator-cap", analyze_args.denominator_cap,
                      "Skip the spectrum search past this admissible modulus");

  CommonArgs tile_args;
  CLI::App* tile = app.add_subcommand("tile", "Tiling verdict and certificate for one set");
  add_set_options(tile, tile_args);
  tile->add_option("--period-bound", tile_args.period_bound,
                   "Largest tiling period to search");

  CommonArgs spectrum_args;
  bool do_construct = false;
  bool do_search = false;
  CLI::App* spectrum = app.add_subcommand("spectrum", "Spectrum of one set");
  add_set_options(spectrum, spectrum_args);
  CLI::Option* c_opt = spectrum->add_flag("--construct", do_construct,
                                          "Build the spectrum from the prime-power divisors");
  spectrum->add_flag("--search", do_search, "Exhaustive rational search")->excludes(c_opt);
  spectrum->add_option("--denominator-cap", spectrum_args.denominator_cap,
                       "Refuse searches past this admissible modulus");

  spectile::ExperimentConfig exp_cfg;
  int exp_n = 0;
  CLI::App* enumerate = app.add_subcommand("enumerate", "Run an experiment over a corpus");
  enumerate->add_option("--n", exp_n, "Set size (fixes both ends of the size range)");
  enumerate->add_option("--n-min", exp_cfg.n_min, "Smallest set size");
  enumerate->add_option("--n-max", exp_cfg.n_max, "Largest set size");
  enumerate->add_option("--max", exp_cfg.m_bound, "Span bound for enumerated sets");
  enumerate->add_option("--experiment", exp_cfg.name, "Experiment name")->required();
  enumerate->add_option("--workers", exp_cfg.workers, "Worker threads");
  enumerate->add_option("--out", exp_cfg.out_path, "CSV output path");
  enumerate->add_option("--period-bound", exp_cfg.period_bound,
                        "Largest tiling period to search per set");
  enumerate->add_option("--denominator-cap", exp_cfg.denominator_cap,
                        "Spectrum search modulus cap");

  for (CLI::App* sub : {analyze, tile, spectrum, enumerate})
    sub->configurable();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      spectile::AnalyzeOptions opts;
      opts.period_bound = analyze_args.period_bound;
      opts.denominator_cap = analyze_args.denominator_cap;
      return emit_report(spectile::analyze(spectile::parse_set(analyze_args.set_text), opts),
                         analyze_args.json);
    }

    if (*tile) {
      spectile::AnalyzeOptions opts;
      opts.period_bound = tile_args.period_bound;
      opts.numeric_checks = false;
      const auto report = spectile::analyze(spectile::parse_set(tile_args.set_text), opts);
      if (tile_args.json) return emit_report(report, true);
      std::cout << "set: " << spectile::TileSet(report.set).str() << '\n'
                << "tiling: " << report.tiling_status << " (" << report.tiling_reason << ")\n";
      if (report.certificate) {
        std::cout << "period: " << report.certificate->period << "\ncomplement:";
        for (long long b : report.certificate->complement) std::cout << ' ' << b;
        std::cout << '\n';
      }
      return 0;
    }

    if (*spectrum) {
      const auto elems = spectile::parse_set(spectrum_args.set_text);
      spectile::AnalyzeOptions opts;
      opts.denominator_cap = spectrum_args.denominator_cap;
      opts.numeric_checks = false;
      const auto report = spectile::analyze(elems, opts);
      if (spectrum_args.json) return emit_report(report, true);
      const spectile::TileSet A(report.set);
      if (!do_search && report.constructed_spectrum)
        std::cout << "constructed: " << report.constructed_spectrum->str() << '\n';
      else if (do_construct)
        std::cout << "construction unavailable: divisibility conditions fail\n";
      if (!do_construct) {
        if (report.searched_spectrum)
          std::cout << "searched: " << report.searched_spectrum->str() << '\n';
        else
          std::cout << "searched: none"
                    << (report.search_complete ? " (rational candidates exhausted)" : "")
                    << '\n';
      }
      std::cout << "spectral: " << report.spectral_status << '\n';
      return 0;
    }

    if (*enumerate) {
      if (exp_n > 0) {
        exp_cfg.n_min = exp_n;
        exp_cfg.n_max = exp_n;
      }
      const auto result = spectile::run_experiment(exp_cfg);
      std::cout << spectile::summary_text(result);
      if (exp_cfg.out_path.empty()) std::cout << result.csv;
      return result.violations == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
