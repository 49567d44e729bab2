#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace spectile {

// Elementary integer routines shared across the library. Inputs are desk
// scale, so plain trial division is deliberate.

long long euler_phi(long long n);

// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

// All positive divisors of n, ascending.
std::vector<long long> divisors_of(long long n);

// p when n = p^k for a prime p and k >= 1, absent otherwise.
std::optional<long long> prime_power_base(long long n);

// lcm(a, b), or absent if it would exceed cap.
std::optional<long long> checked_lcm(long long a, long long b, long long cap);

}  // namespace spectile
