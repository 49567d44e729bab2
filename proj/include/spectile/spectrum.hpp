#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectile/rational.hpp"
#include "spectile/tileset.hpp"

namespace spectile {

/**
 * Candidate spectrum: distinct rationals in [0,1), sorted ascending,
 * normalized to contain 0.
 */
class Spectrum {
 public:
  explicit Spectrum(std::vector<Reduced> thetas);
  static Spectrum trivial();  // {0}

  const std::vector<Reduced>& values() const { return thetas_; }
  int size() const { return static_cast<int>(thetas_.size()); }

  bool operator==(const Spectrum& o) const { return thetas_ == o.thetas_; }
  std::string str() const;

 private:
  std::vector<Reduced> thetas_;
};

// {sum_s k_s / s : 0 <= k_s < p for each prime-power divisor s = p^a}.
// Requires both divisibility conditions (t1 and t2); #A = 1 yields {0}.
// The cardinality is exactly #A, forced by t1.
Spectrum construct_spectrum(const TileSet& A);

struct SpectrumCheck {
  enum class Failure { None, CardinalityMismatch, RootTestFailed };
  bool ok = false;
  Failure failure = Failure::None;
  // Populated for RootTestFailed: the offending difference and its indices.
  Reduced failed_difference;
  int i = -1;
  int j = -1;
};

// Exact verification: cardinality must match #A and every pairwise
// difference must be a root of the mask polynomial. Differences come in
// complementary pairs with equal denominators, so unordered pairs decide
// both orders.
SpectrumCheck check_spectrum(const TileSet& A, const Spectrum& cand);
bool verify_spectrum(const TileSet& A, const Spectrum& cand);

// Exhaustive search over Z_D, D = lcm of the cyclotomic divisors: the
// lexicographically first #A-clique of the admissible-difference graph that
// contains 0, mapped to {t/D}. Absent when the divisor list is empty or no
// clique exists. Requires #A >= 2. Any rational spectrum lies in (1/D)Z,
// so absence refutes rational spectra outright.
std::optional<Spectrum> spectrum_search(const TileSet& A);

// lcm of the cyclotomic divisors (1 when there are none), absent if it
// would exceed cap. Requires #A >= 2.
std::optional<long long> admissible_modulus(const TileSet& A, long long cap);

// Reduced denominator of sum k_i/s_i for pairwise coprime s_i >= 2 with
// gcd(k_i, s_i) = 1; always equals the product of the s_i.
long long unit_fraction_order(const std::vector<std::pair<long long, long long>>& parts);

struct PrimePowerReport {
  long long prime = 0;
  int exponent = 0;  // #A = prime^exponent
  bool t1 = false;

  bool operator==(const PrimePowerReport&) const = default;
};

// For a verified spectrum whose nonzero denominators are all powers of one
// prime p: #A must be a power of p and t1 must hold; a breach throws
// std::logic_error rather than being swallowed. Absent when the spectrum is
// not of single-prime-power type. Requires verify_spectrum(A, cand).
std::optional<PrimePowerReport> prime_power_spectrum_check(const TileSet& A,
                                                           const Spectrum& cand);

// Fourier transform of the indicator of A + [0,1) at frequency xi;
// equals #A at xi = 0. Numeric cross-check only, never a verdict source.
std::complex<double> chi_hat(const TileSet& A, double xi);

// Column orthogonality of the matrix (e^(2 pi i a_j theta_k)) within tol.
// Requires matching sizes. Agrees with verify_spectrum on rational input.
bool hadamard_check(const TileSet& A, const Spectrum& cand, double tol);

}  // namespace spectile
