#include "spectile/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spectile {

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long euler_phi(long long n) {
  long long phi = n;
  for (const auto& [p, e] : factorize(n)) phi -= phi / p;
  return phi;
}

std::vector<long long> divisors_of(long long n) {
  std::vector<long long> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    long long pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::optional<long long> prime_power_base(long long n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front().first;
}

std::optional<long long> checked_lcm(long long a, long long b, long long cap) {
  const long long g = std::gcd(a, b);
  const long long a1 = a / g;
  if (a1 > cap / b) return std::nullopt;
  return a1 * b;
}

}  // namespace spectile
