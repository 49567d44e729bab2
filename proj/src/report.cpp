#include "spectile/report.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "spectile/cyclotomic.hpp"

namespace spectile {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kNumericTol = 1e-9;

std::string status_name(TileStatus s) {
  switch (s) {
    case TileStatus::Tiles: return "tiles";
    case TileStatus::DoesNotTile: return "does-not-tile";
    case TileStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string reason_name(TileReason r) {
  switch (r) {
    case TileReason::T1Fails: return "t1-fails";
    case TileReason::CertificateFound: return "certificate-found";
    case TileReason::SearchExhausted: return "search-exhausted";
  }
  return "search-exhausted";
}

ordered_json spectrum_to_json(const Spectrum& s) {
  ordered_json arr = ordered_json::array();
  for (const Reduced& t : s.values()) arr.push_back(t.str());
  return arr;
}

Spectrum spectrum_from_json(const ordered_json& arr) {
  std::vector<Reduced> values;
  for (const auto& item : arr) {
    auto q = Reduced::parse(item.get<std::string>());
    if (!q) throw std::invalid_argument("report: bad rational " + item.get<std::string>());
    values.push_back(*q);
  }
  return Spectrum(std::move(values));
}

// Numeric cross-checks for one (set, spectrum) pair; results are recorded
// next to the exact verdict but never override it.
void append_numeric_checks(const TileSet& A, const Spectrum& s, bool exact_ok,
                           const std::string& label, std::vector<NamedCheck>& checks) {
  const bool had = hadamard_check(A, s, kNumericTol);
  checks.push_back({label + "-hadamard-agreement", had == exact_ok,
                    std::string("numeric ") + (had ? "orthogonal" : "non-orthogonal") +
                        ", exact " + (exact_ok ? "verified" : "refuted")});
  if (exact_ok) {
    bool zeros = true;
    const auto& th = s.values();
    for (std::size_t i = 0; i < th.size() && zeros; ++i)
      for (std::size_t j = i + 1; j < th.size() && zeros; ++j)
        zeros = std::abs(chi_hat(A, (th[j] - th[i]).to_double())) < kNumericTol;
    checks.push_back({label + "-transform-zeros", zeros,
                      zeros ? "all pairwise differences vanish within 1e-9"
                            : "a difference misses the zero set"});
  }
}

}  // namespace

std::vector<long long> parse_set(const std::string& text) {
  std::vector<long long> out;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("parse_set: empty element");
    token = token.substr(b, e - b + 1);
    long long v = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || p != token.data() + token.size())
      throw std::invalid_argument("parse_set: not an integer: " + token);
    if (v < 0) throw std::invalid_argument("parse_set: negative element: " + token);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("parse_set: empty set");
  std::set<long long> uniq(out.begin(), out.end());
  if (uniq.size() != out.size()) throw std::invalid_argument("parse_set: duplicate element");
  return out;
}

AnalysisReport analyze(const std::vector<long long>& input, const AnalyzeOptions& opts) {
  AnalysisReport r;
  r.input_set = input;
  r.set = input;
  std::sort(r.set.begin(), r.set.end());
  if (r.set.empty()) throw std::invalid_argument("analyze: empty set");
  if (r.set.front() != 0) {
    r.offset = r.set.front();
    for (auto& v : r.set) v -= r.offset;
    r.notes.push_back("translated by -" + std::to_string(r.offset) + " to contain 0");
  }

  const TileSet A(r.set);
  r.n = A.size();
  r.m = A.span();

  if (r.n == 1) {
    r.t1 = true;
    r.t2 = true;
    r.tiling_status = "tiles";
    r.tiling_reason = "certificate-found";
    r.certificate = TilingCertificate{1, {0}};
    r.constructed_spectrum = Spectrum::trivial();
    r.search_complete = true;
    r.spectral_status = "spectral";
    return r;
  }

  const CycloProfile prof = profile(A);
  r.divisors = prof.divisors;
  r.prime_power_divisors = prof.prime_powers;
  r.t1 = prof.t1;
  r.t2 = prof.t2;

  const long long bound = opts.period_bound > 0 ? opts.period_bound : default_period_bound(A);
  const TilingVerdict verdict = tiles_Z(A, bound, prof);
  r.tiling_status = status_name(verdict.status);
  r.tiling_reason = reason_name(verdict.reason);
  r.certificate = verdict.certificate;
  if (r.certificate) {
    const bool ok = certificate_valid(A, *r.certificate);
    r.checks.push_back({"certificate-identity", ok,
                        ok ? "mask product reduces to the full cyclic mask" : "identity fails"});
  }
  if (verdict.status == TileStatus::Unknown)
    r.notes.push_back("no certificate up to period bound " + std::to_string(bound));

  bool spectral = false;
  std::optional<Spectrum> witness;
  if (prof.t1 && prof.t2) {
    r.constructed_spectrum = construct_spectrum(A);
    const bool ok = verify_spectrum(A, *r.constructed_spectrum);
    r.checks.push_back({"constructed-spectrum-verifies", ok,
                        r.constructed_spectrum->str()});
    if (ok && !witness) witness = r.constructed_spectrum;
    spectral = spectral || ok;
    if (opts.numeric_checks)
      append_numeric_checks(A, *r.constructed_spectrum, ok, "constructed", r.checks);
  }

  const auto modulus = admissible_modulus(A, opts.denominator_cap);
  if (modulus) {
    r.searched_spectrum = spectrum_search(A);
    r.search_complete = true;
    if (r.searched_spectrum) {
      const bool ok = verify_spectrum(A, *r.searched_spectrum);
      r.checks.push_back({"searched-spectrum-verifies", ok, r.searched_spectrum->str()});
      if (ok && !witness) witness = r.searched_spectrum;
      spectral = spectral || ok;
      if (opts.numeric_checks)
        append_numeric_checks(A, *r.searched_spectrum, ok, "searched", r.checks);
    }
  } else {
    r.notes.push_back("spectrum search skipped: admissible modulus exceeds cap " +
                      std::to_string(opts.denominator_cap));
  }

  if (spectral) {
    r.spectral_status = "spectral";
  } else if (r.search_complete && !r.searched_spectrum && 2 * r.m < 5 * r.n) {
    // Below this span any spectrum is rational, and the search covered all
    // rational candidates.
    r.spectral_status = "not-spectral";
  } else {
    r.spectral_status = "unknown";
    if (r.search_complete && !r.searched_spectrum)
      r.notes.push_back("no rational spectrum; irrational spectra not ruled out at this span");
  }

  if (witness) {
    try {
      if (auto pp = prime_power_spectrum_check(A, *witness)) {
        r.checks.push_back({"prime-power-spectrum", true,
                            "denominators are powers of " + std::to_string(pp->prime) +
                                "; #A = " + std::to_string(pp->prime) + "^" +
                                std::to_string(pp->exponent) + ", t1 holds"});
      }
    } catch (const std::logic_error& e) {
      r.checks.push_back({"prime-power-spectrum", false, e.what()});
    }
  }
  return r;
}

std::string report_to_json(const AnalysisReport& r) {
  ordered_json j;
  j["version"] = r.version;
  j["input_set"] = r.input_set;
  j["set"] = r.set;
  j["offset"] = r.offset;
  j["n"] = r.n;
  j["m"] = r.m;
  j["divisors"] = r.divisors;
  j["prime_power_divisors"] = r.prime_power_divisors;
  j["t1"] = r.t1;
  j["t2"] = r.t2;
  ordered_json tiling;
  tiling["status"] = r.tiling_status;
  tiling["reason"] = r.tiling_reason;
  if (r.certificate) {
    tiling["period"] = r.certificate->period;
    tiling["complement"] = r.certificate->complement;
  } else {
    tiling["period"] = nullptr;
    tiling["complement"] = nullptr;
  }
  j["tiling"] = tiling;
  j["constructed_spectrum"] =
      r.constructed_spectrum ? spectrum_to_json(*r.constructed_spectrum) : ordered_json(nullptr);
  j["searched_spectrum"] =
      r.searched_spectrum ? spectrum_to_json(*r.searched_spectrum) : ordered_json(nullptr);
  j["search_complete"] = r.search_complete;
  j["spectral_status"] = r.spectral_status;
  j["notes"] = r.notes;
  ordered_json checks = ordered_json::array();
  for (const NamedCheck& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  AnalysisReport r;
  r.version = j.at("version").get<int>();
  if (r.version != kReportVersion)
    throw std::invalid_argument("report: unsupported version " + std::to_string(r.version));
  r.input_set = j.at("input_set").get<std::vector<long long>>();
  r.set = j.at("set").get<std::vector<long long>>();
  r.offset = j.at("offset").get<long long>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<long long>();
  r.divisors = j.at("divisors").get<std::vector<long long>>();
  r.prime_power_divisors = j.at("prime_power_divisors").get<std::vector<long long>>();
  r.t1 = j.at("t1").get<bool>();
  r.t2 = j.at("t2").get<bool>();
  const auto& tiling = j.at("tiling");
  r.tiling_status = tiling.at("status").get<std::string>();
  r.tiling_reason = tiling.at("reason").get<std::string>();
  if (!tiling.at("period").is_null())
    r.certificate = TilingCertificate{tiling.at("period").get<long long>(),
                                      tiling.at("complement").get<std::vector<long long>>()};
  if (!j.at("constructed_spectrum").is_null())
    r.constructed_spectrum = spectrum_from_json(j.at("constructed_spectrum"));
  if (!j.at("searched_spectrum").is_null())
    r.searched_spectrum = spectrum_from_json(j.at("searched_spectrum"));
  r.search_complete = j.at("search_complete").get<bool>();
  r.spectral_status = j.at("spectral_status").get<std::string>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                        c.at("detail").get<std::string>()});
  return r;
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "set: " << TileSet(r.set).str() << "  (n=" << r.n << ", span=" << r.m << ")\n";
  if (r.offset) out << "  input translated by -" << r.offset << "\n";
  out << "cyclotomic divisors:";
  if (r.divisors.empty()) out << " none";
  for (long long d : r.divisors) out << ' ' << d;
  out << "\nprime-power divisors:";
  if (r.prime_power_divisors.empty()) out << " none";
  for (long long d : r.prime_power_divisors) out << ' ' << d;
  out << "  [t1: " << (r.t1 ? "yes" : "no") << ", t2: " << (r.t2 ? "yes" : "no") << "]\n";
  out << "tiling: " << r.tiling_status << " (" << r.tiling_reason << ")";
  if (r.certificate) {
    out << "; period " << r.certificate->period << ", complement {";
    for (std::size_t i = 0; i < r.certificate->complement.size(); ++i) {
      if (i) out << ',';
      out << r.certificate->complement[i];
    }
    out << '}';
  }
  out << '\n';
  if (r.constructed_spectrum)
    out << "constructed spectrum: " << r.constructed_spectrum->str() << '\n';
  if (r.searched_spectrum)
    out << "searched spectrum: " << r.searched_spectrum->str() << '\n';
  out << "spectral: " << r.spectral_status << '\n';
  std::size_t passed = 0;
  for (const NamedCheck& c : r.checks) passed += c.pass;
  out << "checks: " << passed << '/' << r.checks.size() << " passed\n";
  for (const NamedCheck& c : r.checks)
    if (!c.pass) out << "  FAILED " << c.name << ": " << c.detail << '\n';
  for (const std::string& nline : r.notes) out << "note: " << nline << '\n';
  return out.str();
}

}  // namespace spectile
