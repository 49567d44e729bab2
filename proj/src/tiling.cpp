#include "spectile/tiling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spectile/intpoly.hpp"
#include "spectile/numtheory.hpp"

namespace spectile {

namespace {

struct CoverSearch {
  long long n;
  std::vector<long long> residues;  // A mod n
  std::vector<char> cover;
  std::vector<long long> anchors;

  bool place(long long b) {
    std::size_t done = 0;
    for (long long r : residues) {
      const auto i = static_cast<std::size_t>((b + r) % n);
      if (cover[i]) {
        for (std::size_t j = 0; j < done; ++j)
          cover[static_cast<std::size_t>((b + residues[j]) % n)] = 0;
        return false;
      }
      cover[i] = 1;
      ++done;
    }
    return true;
  }

  void unplace(long long b) {
    for (long long r : residues) cover[static_cast<std::size_t>((b + r) % n)] = 0;
  }

  bool dfs(long long covered) {
    if (covered == n) return true;
    long long r = 0;
    while (cover[static_cast<std::size_t>(r)]) ++r;

    // Every anchor whose translate hits r; wraparound anchors are genuine
    // candidates in Z_n, so all of them are branched, ascending.
    std::set<long long> cands;
    if (covered == 0) {
      cands.insert(0);
    } else {
      for (long long a : residues) cands.insert(((r - a) % n + n) % n);
    }
    for (long long b : cands) {
      if (cover[static_cast<std::size_t>(b)]) continue;  // anchor covers itself
      if (!place(b)) continue;
      anchors.push_back(b);
      if (dfs(covered + static_cast<long long>(residues.size()))) return true;
      anchors.pop_back();
      unplace(b);
    }
    return false;
  }
};

long long prime_power_product(const CycloProfile& prof, long long cap) {
  long long prod = 1;
  for (long long s : prof.prime_powers) {
    if (prod > cap / s) return cap + 1;
    prod *= s;
  }
  return prod;
}

}  // namespace

std::optional<TilingCertificate> find_complement(const TileSet& A, long long n) {
  if (n < 1) throw std::invalid_argument("find_complement: period must be >= 1");
  const long long N = A.size();
  if (n % N != 0) throw std::invalid_argument("find_complement: period must be a multiple of #A");

  CoverSearch s{n, {}, std::vector<char>(static_cast<std::size_t>(n), 0), {}};
  s.residues.reserve(A.elements().size());
  for (long long a : A.elements()) s.residues.push_back(a % n);

  if (!s.dfs(0)) return std::nullopt;
  std::sort(s.anchors.begin(), s.anchors.end());
  TilingCertificate cert{n, std::move(s.anchors)};
  if (!certificate_valid(A, cert))
    throw std::logic_error("find_complement: produced certificate fails the mask identity");
  return cert;
}

bool certificate_valid(const TileSet& A, const TilingCertificate& cert) {
  const long long n = cert.period;
  if (n < 1) return false;
  if (static_cast<long long>(A.elements().size() * cert.complement.size()) != n) return false;
  std::vector<mpz_class> b(static_cast<std::size_t>(n), 0);
  for (long long v : cert.complement) {
    if (v < 0 || v >= n) return false;
    b[static_cast<std::size_t>(v)] = 1;
  }
  const IntPoly product = poly_mul(mask_poly(A), IntPoly(std::move(b)));
  return poly_mod_cyclic(product, n) == IntPoly::all_ones(n);
}

TilingVerdict tiles_Z(const TileSet& A, long long period_bound) {
  if (A.size() == 1) {
    if (period_bound < 1) throw std::invalid_argument("tiles_Z: period bound below #A");
    return {TileStatus::Tiles, TileReason::CertificateFound, TilingCertificate{1, {0}}};
  }
  return tiles_Z(A, period_bound, profile(A));
}

TilingVerdict tiles_Z(const TileSet& A, long long period_bound, const CycloProfile& prof) {
  const long long N = A.size();
  if (period_bound < N) throw std::invalid_argument("tiles_Z: period bound below #A");
  if (N == 1) return {TileStatus::Tiles, TileReason::CertificateFound, TilingCertificate{1, {0}}};

  if (!prof.t1) return {TileStatus::DoesNotTile, TileReason::T1Fails, std::nullopt};

  // With t1, the prime-power product is a multiple of #A, so every searched
  // period is admissible for find_complement.
  const long long step =
      prof.t2 && !prof.prime_powers.empty() ? prime_power_product(prof, period_bound) : N;
  for (long long period = step; period <= period_bound; period += step) {
    if (auto cert = find_complement(A, period))
      return {TileStatus::Tiles, TileReason::CertificateFound, std::move(cert)};
  }
  return {TileStatus::Unknown, TileReason::SearchExhausted, std::nullopt};
}

long long default_period_bound(const TileSet& A, long long hard_cap) {
  const long long N = A.size();
  if (N == 1) return 1;
  const CycloProfile prof = profile(A);
  long long bound;
  if (!prof.prime_powers.empty()) {
    const long long prod = prime_power_product(prof, hard_cap);
    bound = prod > hard_cap / 4 ? hard_cap : 4 * prod;
  } else {
    const long long mn = A.span() * N;
    bound = mn > hard_cap / 4 ? hard_cap : 4 * mn;
  }
  return std::max(bound, N);
}

bool is_fundamental_domain(const TileSet& A) {
  const long long N = A.size();
  std::vector<char> seen(static_cast<std::size_t>(N), 0);
  for (long long a : A.elements()) {
    auto& slot = seen[static_cast<std::size_t>(a % N)];
    if (slot) return false;
    slot = 1;
  }
  return true;
}

std::optional<ProgressionForm> progression_form(const TileSet& A) {
  const long long N = A.size();
  if (N < 2) throw std::invalid_argument("progression_form: need #A >= 2");
  if (!prime_power_base(N) || *prime_power_base(N) != N) return std::nullopt;  // N prime
  const long long d = A.elements()[1];
  for (int i = 0; i < N; ++i)
    if (A.elements()[static_cast<std::size_t>(i)] != i * d) return std::nullopt;
  long long t = d;
  while (t % N == 0) t /= N;
  if (t != 1) return std::nullopt;
  return ProgressionForm{N, d};
}

}  // namespace spectile
