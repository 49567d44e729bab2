#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectile/spectrum.hpp"
#include "spectile/tileset.hpp"
#include "spectile/tiling.hpp"

namespace spectile {

inline constexpr int kReportVersion = 1;

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;

  bool operator==(const NamedCheck&) const = default;
};

/**
 * Everything analyze() determines about one set. Serializes to versioned
 * JSON and back without loss. Numeric cross-checks live only in `checks`;
 * every verdict field is exact.
 */
struct AnalysisReport {
  int version = kReportVersion;
  std::vector<long long> input_set;  // as given
  std::vector<long long> set;        // translated to contain 0
  long long offset = 0;              // set = input_set - offset
  int n = 0;
  long long m = 0;

  std::vector<long long> divisors;
  std::vector<long long> prime_power_divisors;
  bool t1 = false;
  bool t2 = false;

  std::string tiling_status;  // "tiles" | "does-not-tile" | "unknown"
  std::string tiling_reason;  // "t1-fails" | "certificate-found" | "search-exhausted"
  std::optional<TilingCertificate> certificate;

  std::optional<Spectrum> constructed_spectrum;
  std::optional<Spectrum> searched_spectrum;
  bool search_complete = false;   // search covered all rational candidates
  std::string spectral_status;    // "spectral" | "not-spectral" | "unknown"

  std::vector<std::string> notes;
  std::vector<NamedCheck> checks;
};

struct AnalyzeOptions {
  long long period_bound = 0;  // 0: default_period_bound(A)
  long long denominator_cap = 1000000;
  bool numeric_checks = true;
};

// Splits a comma separated list of base-10 integers. Rejects empty input,
// non-integer tokens, negatives and duplicates.
std::vector<long long> parse_set(const std::string& text);

// Full pipeline on one input set. A missing 0 is repaired by translating
// the minimum to 0 (recorded in offset and notes).
AnalysisReport analyze(const std::vector<long long>& input, const AnalyzeOptions& opts = {});

std::string report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const std::string& text);
std::string report_to_text(const AnalysisReport& r);

}  // namespace spectile
