#pragma once

#include <map>
#include <vector>

#include "spectile/intpoly.hpp"
#include "spectile/rational.hpp"
#include "spectile/tileset.hpp"

namespace spectile {

/**
 * Memoized table of cyclotomic polynomials Phi_n, grown on demand.
 * Phi_n is obtained by exact division of x^n - 1 by the product of Phi_d
 * over the proper divisors d of n; entries are deterministic, so private
 * per-worker caches and the shared process cache agree entry for entry.
 */
class CycloCache {
 public:
  const IntPoly& at(long long n);
  std::size_t size() const { return table_.size(); }

 private:
  std::map<long long, IntPoly> table_;
};

struct CycloProfile {
  TileSet set;
  std::vector<long long> divisors;       // all n >= 2 with Phi_n | mask
  std::vector<long long> prime_powers;   // the prime-power members
  bool t1 = false;
  bool t2 = false;
};

// Phi_n via the shared process-wide cache (thread safe). n >= 1.
IntPoly cyclotomic(long long n);

// Phi_n(1): 0 for n = 1, p for n = p^k, 1 otherwise. Agrees with
// evaluating cyclotomic(n) at 1.
long long cyclo_at_one(long long n);

// Ascending list of all n >= 2 with Phi_n dividing the mask polynomial.
// Candidates are bounded by phi(n) <= deg mask. Requires #A >= 2.
std::vector<long long> cyclotomic_divisors(const TileSet& A);

// Divisor structure plus the two divisibility conditions:
// t1: #A equals the product of Phi_s(1) over prime-power divisors s;
// t2: for every choice of >= 2 prime-power divisors with pairwise distinct
//     primes, Phi of their product divides the mask.
// Requires #A >= 2.
CycloProfile profile(const TileSet& A);

// Whether e^(2 pi i q) is a root of the mask polynomial; equivalent to
// q.den() being a cyclotomic divisor. Rejects q = 0.
bool is_root(const TileSet& A, const Reduced& q);

}  // namespace spectile
