#pragma once

// Independent reference implementations used only by tests. They take
// different routes than the library so that agreement is evidence, not
// tautology.

#include <optional>
#include <stdexcept>
#include <vector>

#include "spectile/intpoly.hpp"
#include "spectile/numtheory.hpp"
#include "spectile/tileset.hpp"

namespace oracles {

inline int moebius(long long n) {
  int sign = 1;
  for (const auto& [p, e] : spectile::factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

// Phi_n as prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply the positive part,
// then divide out the negative part exactly.
inline spectile::IntPoly cyclotomic_by_moebius(long long n) {
  using spectile::IntPoly;
  IntPoly num = IntPoly::one();
  IntPoly den = IntPoly::one();
  for (long long d : spectile::divisors_of(n)) {
    const int mu = moebius(n / d);
    if (mu == 1) num = num * IntPoly::xn_minus_one(d);
    if (mu == -1) den = den * IntPoly::xn_minus_one(d);
  }
  const auto dr = spectile::poly_divrem(num, den);
  if (!dr.remainder.is_zero()) throw std::logic_error("moebius oracle: non-exact division");
  return dr.quotient;
}

// Exhaustive complement search over all subsets of Z_n containing 0.
inline std::optional<std::vector<long long>> brute_complement(const spectile::TileSet& A,
                                                              long long n) {
  const long long N = A.size();
  if (n % N != 0) return std::nullopt;
  const long long want = n / N;
  std::vector<long long> residues;
  for (long long a : A.elements()) residues.push_back(a % n);

  for (unsigned long long bits = 0; bits < (1ULL << (n - 1)); ++bits) {
    if (static_cast<long long>(__builtin_popcountll(bits)) != want - 1) continue;
    std::vector<long long> B{0};
    for (long long b = 1; b < n; ++b)
      if (bits & (1ULL << (b - 1))) B.push_back(b);
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    bool exact = true;
    for (long long b : B)
      for (long long r : residues)
        if (++hits[static_cast<std::size_t>((b + r) % n)] > 1) exact = false;
    if (exact) return B;  // first hit in counting order; unique on the boards we use
  }
  return std::nullopt;
}

}  // namespace oracles
