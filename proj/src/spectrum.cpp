#include "spectile/spectrum.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "spectile/cyclotomic.hpp"
#include "spectile/numtheory.hpp"

namespace spectile {

Spectrum::Spectrum(std::vector<Reduced> thetas) : thetas_(std::move(thetas)) {
  if (thetas_.empty()) throw std::invalid_argument("Spectrum: empty");
  std::sort(thetas_.begin(), thetas_.end());
  if (std::adjacent_find(thetas_.begin(), thetas_.end()) != thetas_.end())
    throw std::invalid_argument("Spectrum: duplicate value");
  if (!thetas_.front().is_zero()) throw std::invalid_argument("Spectrum: must contain 0");
}

Spectrum Spectrum::trivial() { return Spectrum({Reduced()}); }

std::string Spectrum::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < thetas_.size(); ++i) {
    if (i) s += ", ";
    s += thetas_[i].str();
  }
  s += '}';
  return s;
}

Spectrum construct_spectrum(const TileSet& A) {
  if (A.size() == 1) return Spectrum::trivial();
  const CycloProfile prof = profile(A);
  if (!prof.t1 || !prof.t2)
    throw std::domain_error("construct_spectrum: requires both divisibility conditions");
  if (prof.prime_powers.empty())
    throw std::logic_error("construct_spectrum: no prime-power divisors despite t1");

  std::set<Reduced> values;
  std::vector<long long> digits(prof.prime_powers.size(), 0);
  for (;;) {
    Reduced sum;
    for (std::size_t i = 0; i < digits.size(); ++i)
      sum = sum + Reduced(digits[i], prof.prime_powers[i]);
    values.insert(sum);

    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      const long long p = *prime_power_base(prof.prime_powers[i]);
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
    if (i == digits.size()) break;
  }

  if (static_cast<int>(values.size()) != A.size())
    throw std::logic_error("construct_spectrum: cardinality drift; t1 should force #A values");
  return Spectrum(std::vector<Reduced>(values.begin(), values.end()));
}

SpectrumCheck check_spectrum(const TileSet& A, const Spectrum& cand) {
  SpectrumCheck out;
  if (cand.size() != A.size()) {
    out.failure = SpectrumCheck::Failure::CardinalityMismatch;
    return out;
  }
  if (A.size() == 1) {
    out.ok = true;
    return out;
  }
  const std::vector<long long> divisors = cyclotomic_divisors(A);
  const auto& th = cand.values();
  for (std::size_t i = 0; i < th.size(); ++i) {
    for (std::size_t j = i + 1; j < th.size(); ++j) {
      const Reduced diff = th[j] - th[i];
      if (!std::binary_search(divisors.begin(), divisors.end(), diff.den())) {
        out.failure = SpectrumCheck::Failure::RootTestFailed;
        out.failed_difference = diff;
        out.i = static_cast<int>(i);
        out.j = static_cast<int>(j);
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

bool verify_spectrum(const TileSet& A, const Spectrum& cand) {
  return check_spectrum(A, cand).ok;
}

std::optional<long long> admissible_modulus(const TileSet& A, long long cap) {
  long long D = 1;
  for (long long d : cyclotomic_divisors(A)) {
    auto next = checked_lcm(D, d, cap);
    if (!next) return std::nullopt;
    D = *next;
  }
  return D;
}

std::optional<Spectrum> spectrum_search(const TileSet& A) {
  const int N = A.size();
  if (N < 2) throw std::invalid_argument("spectrum_search: need #A >= 2");
  const std::vector<long long> divisors = cyclotomic_divisors(A);
  if (divisors.empty()) return std::nullopt;

  constexpr long long kModulusCap = 100000000;
  long long D = 1;
  for (long long d : divisors) {
    auto next = checked_lcm(D, d, kModulusCap);
    if (!next) throw std::overflow_error("spectrum_search: admissible modulus too large");
    D = *next;
  }

  std::vector<char> adm(static_cast<std::size_t>(D), 0);
  for (long long t = 1; t < D; ++t)
    adm[static_cast<std::size_t>(t)] =
        std::binary_search(divisors.begin(), divisors.end(), D / std::gcd(t, D));

  // Depth-first over ascending residues: the first completed clique is the
  // lexicographically least one containing 0.
  std::vector<long long> chosen{0};
  auto dfs = [&](auto&& self, long long start) -> bool {
    if (static_cast<int>(chosen.size()) == N) return true;
    const long long needed = N - static_cast<long long>(chosen.size());
    for (long long t = start; t + needed - 1 < D; ++t) {
      bool fits = true;
      for (long long c : chosen) {
        if (!adm[static_cast<std::size_t>(t - c)]) {  // c < t, so t - c in (0, D)
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      chosen.push_back(t);
      if (self(self, t + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 1)) return std::nullopt;

  std::vector<Reduced> thetas;
  thetas.reserve(chosen.size());
  for (long long t : chosen) thetas.emplace_back(t, D);
  return Spectrum(std::move(thetas));
}

long long unit_fraction_order(const std::vector<std::pair<long long, long long>>& parts) {
  if (parts.empty()) throw std::invalid_argument("unit_fraction_order: no parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto [k, s] = parts[i];
    if (s < 2) throw std::invalid_argument("unit_fraction_order: denominators must be >= 2");
    const long long kr = (k % s + s) % s;
    if (std::gcd(kr, s) != 1)
      throw std::invalid_argument("unit_fraction_order: numerator not coprime to denominator");
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (std::gcd(s, parts[j].second) != 1)
        throw std::invalid_argument("unit_fraction_order: denominators not pairwise coprime");
  }
  Reduced sum;
  for (const auto& [k, s] : parts) sum = sum + Reduced(k, s);
  return sum.den();
}

std::optional<PrimePowerReport> prime_power_spectrum_check(const TileSet& A,
                                                           const Spectrum& cand) {
  if (!verify_spectrum(A, cand))
    throw std::invalid_argument("prime_power_spectrum_check: spectrum does not verify");

  long long p = 0;
  for (const Reduced& t : cand.values()) {
    if (t.is_zero()) continue;
    const auto base = prime_power_base(t.den());
    if (!base) return std::nullopt;
    if (p == 0) p = *base;
    if (*base != p) return std::nullopt;
  }
  if (p == 0) return std::nullopt;  // only {0}: no denominator to type

  long long rest = A.size();
  int m = 0;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1)
    throw std::logic_error("prime_power_spectrum_check: #A = " + std::to_string(A.size()) +
                           " is not a power of " + std::to_string(p) +
                           " despite a p-power spectrum for " + A.str());
  if (!profile(A).t1)
    throw std::logic_error("prime_power_spectrum_check: t1 fails for " + A.str() +
                           " despite a p-power spectrum");
  return PrimePowerReport{p, m, true};
}

std::complex<double> chi_hat(const TileSet& A, double xi) {
  if (xi == 0.0) return {static_cast<double>(A.size()), 0.0};
  const double tau = 2.0 * std::numbers::pi * xi;
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> front = (std::exp(i * tau) - 1.0) / (i * tau);
  std::complex<double> sum = 0.0;
  for (long long a : A.elements()) sum += std::exp(i * (tau * static_cast<double>(a)));
  return front * sum;
}

bool hadamard_check(const TileSet& A, const Spectrum& cand, double tol) {
  if (cand.size() != A.size())
    throw std::invalid_argument("hadamard_check: size mismatch");
  const auto& th = cand.values();
  const std::complex<double> i(0.0, 1.0);
  for (std::size_t k1 = 0; k1 < th.size(); ++k1) {
    for (std::size_t k2 = k1 + 1; k2 < th.size(); ++k2) {
      const double d = (th[k2] - th[k1]).to_double();
      std::complex<double> dot = 0.0;
      for (long long a : A.elements())
        dot += std::exp(i * (2.0 * std::numbers::pi * d * static_cast<double>(a)));
      if (std::abs(dot) >= tol) return false;
    }
  }
  return true;
}

}  // namespace spectile
