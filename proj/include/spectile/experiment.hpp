#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectile/spectrum.hpp"
#include "spectile/tileset.hpp"
#include "spectile/tiling.hpp"

namespace spectile {

/**
 * One corpus experiment. Zeroed numeric fields mean "use the experiment's
 * default". Rows merge in enumeration order regardless of worker count, so
 * output is byte-identical across worker settings.
 */
struct ExperimentConfig {
  std::string name;
  int n_min = 0;
  int n_max = 0;
  long long m_bound = 0;
  long long period_bound = 0;
  long long denominator_cap = 1000000;
  int workers = 1;
  std::string out_path;  // CSV target; empty writes no file
};

struct ExperimentRow {
  std::vector<long long> set;
  bool t1 = false;
  bool t2 = false;
  TileStatus status = TileStatus::Unknown;
  long long period = 0;  // 0 when no certificate
  bool fundamental_domain = false;
  std::optional<Spectrum> constructed;
  std::optional<Spectrum> searched;
  std::optional<Spectrum> lattice;  // the {k/#A} candidate where exercised
  std::vector<std::string> notes;
  std::vector<std::string> violations;
};

struct ExperimentResult {
  std::string name;
  std::vector<ExperimentRow> rows;
  std::size_t sets = 0;
  std::size_t tiles = 0;
  std::size_t spectral = 0;
  std::size_t violations = 0;
  std::vector<std::string> violation_lines;
  std::string csv;
};

const std::vector<std::string>& experiment_names();

// Runs the named experiment over its corpus; throws on unknown names.
// Any violation line names the set, the broken direction and the witnesses.
ExperimentResult run_experiment(const ExperimentConfig& config);

std::string summary_text(const ExperimentResult& r);

}  // namespace spectile
