#include "spectile/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spectile/cyclotomic.hpp"
#include "spectile/enumerate.hpp"
#include "spectile/numtheory.hpp"

namespace spectile {

namespace {

std::string join(const std::vector<long long>& v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = "|") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

// Quote a CSV cell only when it needs it; embedded quotes are doubled.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string spectrum_cell(const std::optional<Spectrum>& s) {
  if (!s) return "";
  std::string out;
  for (std::size_t i = 0; i < s->values().size(); ++i) {
    if (i) out += ' ';
    out += s->values()[i].str();
  }
  return out;
}

std::string status_cell(TileStatus s) {
  switch (s) {
    case TileStatus::Tiles: return "tiles";
    case TileStatus::DoesNotTile: return "does-not-tile";
    case TileStatus::Unknown: return "unknown";
  }
  return "unknown";
}

void flag(ExperimentRow& row, const std::string& direction, const std::string& witness) {
  row.violations.push_back("set=" + TileSet(row.set).str() + " direction=" + direction +
                           (witness.empty() ? "" : " witness=" + witness));
}

long long nonzero_gcd(const TileSet& A) {
  long long g = 0;
  for (long long a : A.elements()) g = std::gcd(g, a);
  return g == 0 ? 1 : g;
}

int distinct_prime_count(long long n) {
  return static_cast<int>(factorize(n).size());
}

// Shared per-set work: profile, tiling verdict, optional period override.
struct BaseFacts {
  CycloProfile prof;
  TilingVerdict verdict;
};

BaseFacts base_facts(const TileSet& A, const ExperimentConfig& cfg) {
  CycloProfile prof = profile(A);
  const long long bound =
      cfg.period_bound > 0 ? cfg.period_bound : default_period_bound(A);
  TilingVerdict verdict = tiles_Z(A, bound, prof);
  return {std::move(prof), std::move(verdict)};
}

void fill_common(ExperimentRow& row, const TileSet& A, const BaseFacts& facts) {
  row.set = A.elements();
  row.t1 = facts.prof.t1;
  row.t2 = facts.prof.t2;
  row.status = facts.verdict.status;
  row.period = facts.verdict.certificate ? facts.verdict.certificate->period : 0;
  row.fundamental_domain = is_fundamental_domain(A);
  if (facts.verdict.certificate && !certificate_valid(A, *facts.verdict.certificate))
    flag(row, "certificate-identity",
         "period=" + std::to_string(facts.verdict.certificate->period));
}

ExperimentRow cm_row(const TileSet& A, const ExperimentConfig& cfg) {
  ExperimentRow row;
  const BaseFacts facts = base_facts(A, cfg);
  fill_common(row, A, facts);

  const bool tiles = row.status == TileStatus::Tiles;
  if (tiles && !row.t1) flag(row, "tiles-implies-t1", "");
  if (row.t1 && row.t2 && !tiles)
    flag(row, "t1-and-t2-imply-tiles", "status=" + status_cell(row.status));
  if (distinct_prime_count(A.size()) <= 2 && tiles != (row.t1 && row.t2))
    flag(row, "tiles-iff-t1-and-t2",
         "status=" + status_cell(row.status) + " t1=" + (row.t1 ? "1" : "0") +
             " t2=" + (row.t2 ? "1" : "0"));
  if (tiles && !row.t2) row.notes.push_back("tiles with t2 false");

  if (row.t1 && row.t2) {
    row.constructed = construct_spectrum(A);
    if (!verify_spectrum(A, *row.constructed))
      flag(row, "constructed-spectrum-verifies", row.constructed->str());
  }
  return row;
}

ExperimentRow thm3_row(const TileSet& A, const ExperimentConfig& cfg) {
  ExperimentRow row;
  const int N = A.size();
  if (N == 1) {
    row.set = A.elements();
    row.t1 = row.t2 = true;
    row.status = TileStatus::Tiles;
    row.period = 1;
    row.fundamental_domain = true;
    row.constructed = Spectrum::trivial();
    return row;
  }
  const BaseFacts facts = base_facts(A, cfg);
  fill_common(row, A, facts);

  const bool tiles = row.status == TileStatus::Tiles;
  row.searched = spectrum_search(A);
  const bool spectral = row.searched.has_value();
  if (tiles != row.fundamental_domain)
    flag(row, "tiles-iff-fundamental-domain",
         "status=" + status_cell(row.status) + " fd=" + (row.fundamental_domain ? "1" : "0"));
  if (row.fundamental_domain != spectral)
    flag(row, "fundamental-domain-iff-spectral",
         std::string("fd=") + (row.fundamental_domain ? "1" : "0") +
             " searched=" + spectrum_cell(row.searched));
  if (tiles && row.fundamental_domain && spectral) {
    std::vector<Reduced> lattice;
    for (int k = 0; k < N; ++k) lattice.emplace_back(k, N);
    row.lattice = Spectrum(std::move(lattice));
    if (!verify_spectrum(A, *row.lattice))
      flag(row, "lattice-spectrum-verifies", row.lattice->str());
  }
  return row;
}

ExperimentRow sharpness_row(int half, const ExperimentConfig& cfg) {
  // {0..half-1} u {2*half..3*half-1}: tiles and is spectral, yet fails the
  // fundamental-domain test; span sits exactly at 3#A/2.
  std::vector<long long> elems;
  for (long long i = 0; i < half; ++i) elems.push_back(i);
  for (long long i = 2 * half; i < 3 * half; ++i) elems.push_back(i);
  const TileSet A(std::move(elems));

  ExperimentRow row;
  const BaseFacts facts = base_facts(A, cfg);
  fill_common(row, A, facts);
  row.notes.push_back("boundary sharpness set");

  row.searched = spectrum_search(A);
  if (row.status != TileStatus::Tiles)
    flag(row, "sharpness-tiles", "status=" + status_cell(row.status));
  if (!row.searched) flag(row, "sharpness-spectral", "");
  if (row.fundamental_domain) flag(row, "sharpness-not-fundamental-domain", "");
  return row;
}

ExperimentRow n3_row(const TileSet& A, const ExperimentConfig& cfg) {
  ExperimentRow row;
  const BaseFacts facts = base_facts(A, cfg);
  fill_common(row, A, facts);

  const bool tiles = row.status == TileStatus::Tiles;
  row.searched = spectrum_search(A);
  if (row.searched.has_value() != tiles)
    flag(row, "spectral-iff-tiles",
         "status=" + status_cell(row.status) + " searched=" + spectrum_cell(row.searched));
  if (row.searched) {
    if (!verify_spectrum(A, *row.searched))
      flag(row, "searched-spectrum-verifies", row.searched->str());
    // Any spectrum of a three-element set lives in (1/3g)Z, g the element gcd.
    const long long g = nonzero_gcd(A);
    for (const Reduced& t : row.searched->values())
      if ((3 * g) % t.den() != 0)
        flag(row, "spectrum-within-one-third-lattice",
             t.str() + " vs 3g=" + std::to_string(3 * g));
  }
  return row;
}

ExperimentRow prime_power_row(const TileSet& A, const ExperimentConfig& cfg) {
  ExperimentRow row;
  const BaseFacts facts = base_facts(A, cfg);
  fill_common(row, A, facts);

  if (row.t1 && row.t2) row.constructed = construct_spectrum(A);
  row.searched = spectrum_search(A);

  const bool tiles = row.status == TileStatus::Tiles;
  for (const auto& sp : {row.constructed, row.searched}) {
    if (!sp || !verify_spectrum(A, *sp)) continue;
    try {
      const auto report = prime_power_spectrum_check(A, *sp);
      if (report && !tiles)
        flag(row, "prime-power-spectrum-implies-tiles",
             sp->str() + " status=" + status_cell(row.status));
    } catch (const std::logic_error& e) {
      flag(row, "prime-power-spectrum-theorem", e.what());
    }
  }
  return row;
}

std::vector<TileSet> span_corpus(int n_min, int n_max, long long m_bound) {
  std::vector<TileSet> corpus;
  for (int n = n_min; n <= n_max; ++n) {
    if (n > m_bound) continue;
    TileSetEnumerator en(n, static_cast<int>(m_bound));
    while (auto A = en.next()) corpus.push_back(std::move(*A));
  }
  return corpus;
}

std::vector<ExperimentRow> map_rows(
    const std::vector<TileSet>& corpus, int workers,
    const std::function<ExperimentRow(const TileSet&)>& fn) {
  std::vector<ExperimentRow> rows(corpus.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) rows[i] = fn(corpus[i]);
    return rows;
  }
  std::atomic<std::size_t> cursor{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= corpus.size()) return;
      rows[i] = fn(corpus[i]);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<int>(workers, static_cast<int>(corpus.size()));
  pool.reserve(static_cast<std::size_t>(count));
  for (int w = 0; w < count; ++w) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"cm-crosscheck", "thm-3N2", "n3-equivalence",
                                              "prime-power-spectra"};
  return names;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentConfig cfg = config;
  std::function<ExperimentRow(const TileSet&)> row_fn;
  std::vector<TileSet> corpus;

  if (cfg.name == "cm-crosscheck" || cfg.name == "prime-power-spectra") {
    if (cfg.n_min == 0) cfg.n_min = 2;
    if (cfg.n_max == 0) cfg.n_max = 6;
    if (cfg.m_bound == 0) cfg.m_bound = 12;
    cfg.n_min = std::max(cfg.n_min, 2);
    corpus = span_corpus(cfg.n_min, cfg.n_max, cfg.m_bound);
    if (cfg.name == "cm-crosscheck")
      row_fn = [cfg](const TileSet& A) { return cm_row(A, cfg); };
    else
      row_fn = [cfg](const TileSet& A) { return prime_power_row(A, cfg); };
  } else if (cfg.name == "thm-3N2") {
    if (cfg.n_min == 0) cfg.n_min = 1;
    if (cfg.n_max == 0) cfg.n_max = 8;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      const long long m_max = (3LL * n - 1) / 2;  // span < 3#A/2
      TileSetEnumerator en(n, static_cast<int>(m_max));
      while (auto A = en.next()) corpus.push_back(std::move(*A));
    }
    row_fn = [cfg](const TileSet& A) { return thm3_row(A, cfg); };
  } else if (cfg.name == "n3-equivalence") {
    if (cfg.m_bound == 0) cfg.m_bound = 15;
    corpus = span_corpus(3, 3, cfg.m_bound);
    row_fn = [cfg](const TileSet& A) { return n3_row(A, cfg); };
  } else {
    throw std::invalid_argument("run_experiment: unknown experiment " + cfg.name);
  }

  ExperimentResult result;
  result.name = cfg.name;
  result.rows = map_rows(corpus, cfg.workers, row_fn);

  if (cfg.name == "thm-3N2")
    for (int half = 1; half <= 3; ++half) result.rows.push_back(sharpness_row(half, cfg));

  std::ostringstream csv;
  csv << "set,n,m,t1,t2,tiling,period,fundamental_domain,constructed_spectrum,"
         "searched_spectrum,notes,violations\n";
  for (const ExperimentRow& row : result.rows) {
    ++result.sets;
    result.tiles += row.status == TileStatus::Tiles;
    result.spectral += row.constructed.has_value() || row.searched.has_value();
    result.violations += row.violations.size();
    for (const std::string& v : row.violations) result.violation_lines.push_back(v);
    const TileSet A(row.set);
    csv << join(row.set) << ',' << row.set.size() << ',' << A.span() << ',' << row.t1 << ','
        << row.t2 << ',' << status_cell(row.status) << ',' << row.period << ','
        << row.fundamental_domain << ',' << spectrum_cell(row.constructed) << ','
        << spectrum_cell(row.searched) << ',' << csv_cell(join(row.notes)) << ','
        << csv_cell(join(row.violations)) << '\n';
  }
  result.csv = csv.str();

  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("run_experiment: cannot write " + cfg.out_path);
    out << result.csv;
  }
  return result;
}

std::string summary_text(const ExperimentResult& r) {
  std::ostringstream out;
  out << "experiment " << r.name << ": " << r.sets << " sets, " << r.tiles << " tile, "
      << r.spectral << " with a spectrum, " << r.violations << " violations\n";
  for (const std::string& v : r.violation_lines) out << "violation: " << v << '\n';
  return out.str();
}

}  // namespace spectile
