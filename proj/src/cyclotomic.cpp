#include "spectile/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "spectile/numtheory.hpp"

namespace spectile {

const IntPoly& CycloCache::at(long long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
  auto hit = table_.find(n);
  if (hit != table_.end()) return hit->second;

  // Fill bottom-up: every proper divisor of d also divides n and sorts
  // earlier, so its entry exists by the time d is reduced.
  for (long long d : divisors_of(n)) {
    if (table_.contains(d)) continue;
    IntPoly num = IntPoly::xn_minus_one(d);
    for (long long e : divisors_of(d)) {
      if (e == d) continue;
      DivRem dr = poly_divrem(num, table_.at(e));
      if (!dr.remainder.is_zero())
        throw std::logic_error("CycloCache: non-exact division in recursion");
      num = std::move(dr.quotient);
    }
    table_.emplace(d, std::move(num));
  }
  return table_.at(n);
}

namespace {

std::mutex g_cache_mutex;
CycloCache g_cache;

bool mask_divisible_by_cyclo(const IntPoly& mask, long long n) {
  return poly_divrem(mask, cyclotomic(n)).remainder.is_zero();
}

}  // namespace

IntPoly cyclotomic(long long n) {
  std::scoped_lock lock(g_cache_mutex);
  return g_cache.at(n);
}

long long cyclo_at_one(long long n) {
  if (n < 1) throw std::invalid_argument("cyclo_at_one: n must be >= 1");
  if (n == 1) return 0;
  if (auto p = prime_power_base(n)) return *p;
  return 1;
}

std::vector<long long> cyclotomic_divisors(const TileSet& A) {
  if (A.size() < 2) throw std::invalid_argument("cyclotomic_divisors: need #A >= 2");
  const IntPoly mask = mask_poly(A);
  const long long deg = mask.degree();
  // phi(n) >= sqrt(n/2), so phi(n) <= deg forces n <= 2*deg^2.
  const long long bound = 2 * deg * deg;
  std::vector<long long> out;
  for (long long n = 2; n <= bound; ++n) {
    if (euler_phi(n) > deg) continue;
    if (mask_divisible_by_cyclo(mask, n)) out.push_back(n);
  }
  return out;
}

CycloProfile profile(const TileSet& A) {
  CycloProfile prof{A, cyclotomic_divisors(A), {}, false, false};
  for (long long d : prof.divisors)
    if (prime_power_base(d)) prof.prime_powers.push_back(d);

  const long long N = A.size();
  long long product = 1;
  for (long long s : prof.prime_powers) {
    product *= cyclo_at_one(s);
    if (product > N) break;
  }
  prof.t1 = (product == N);

  // Group prime-power divisors by prime; a valid selection takes at most
  // one power per prime and at least two primes.
  std::vector<std::pair<long long, std::vector<long long>>> groups;
  for (long long s : prof.prime_powers) {
    const long long p = *prime_power_base(s);
    if (groups.empty() || groups.back().first != p) groups.push_back({p, {}});
    groups.back().second.push_back(s);
  }

  const IntPoly mask = mask_poly(A);
  const long long deg = mask.degree();
  bool ok = true;
  std::function<void(std::size_t, int, long long, long long)> walk =
      [&](std::size_t idx, int chosen, long long prod, long long phi) {
        if (!ok) return;
        if (idx == groups.size()) {
          if (chosen >= 2 && !mask_divisible_by_cyclo(mask, prod)) ok = false;
          return;
        }
        walk(idx + 1, chosen, prod, phi);
        if (!ok) return;
        for (long long s : groups[idx].second) {
          const long long f = euler_phi(s);
          if (phi * f > deg) {
            // deg Phi = phi(product) only grows with further picks, so any
            // selection of size >= 2 through s fails divisibility on degree
            // grounds alone. One exists unless s would stand alone.
            if (chosen >= 1 || idx + 1 < groups.size()) {
              ok = false;
              return;
            }
            continue;
          }
          walk(idx + 1, chosen + 1, prod * s, phi * f);
          if (!ok) return;
        }
      };
  walk(0, 0, 1, 1);
  prof.t2 = ok;
  return prof;
}

bool is_root(const TileSet& A, const Reduced& q) {
  if (q.is_zero()) throw std::domain_error("is_root: q must be nonzero");
  const IntPoly mask = mask_poly(A);
  if (euler_phi(q.den()) > mask.degree()) return false;
  return poly_divrem(mask, cyclotomic(q.den())).remainder.is_zero();
}

}  // namespace spectile
