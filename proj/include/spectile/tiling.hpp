#pragma once

#include <optional>
#include <vector>

#include "spectile/cyclotomic.hpp"
#include "spectile/tileset.hpp"

namespace spectile {

/**
 * Witness that A + B = Z_n exactly: #A * #B = n, and the mask identity
 * A(x) * B(x) = 1 + x + ... + x^(n-1) holds mod x^n - 1.
 */
struct TilingCertificate {
  long long period = 0;
  std::vector<long long> complement;  // subset of {0..period-1}, ascending

  bool operator==(const TilingCertificate&) const = default;
};

enum class TileStatus { Tiles, DoesNotTile, Unknown };
enum class TileReason { T1Fails, CertificateFound, SearchExhausted };

// DoesNotTile is only ever issued with reason T1Fails: failing the first
// divisibility condition is the one sound refutation implemented.
struct TilingVerdict {
  TileStatus status = TileStatus::Unknown;
  TileReason reason = TileReason::SearchExhausted;
  std::optional<TilingCertificate> certificate;
};

// Exact-cover backtracking over Z_n: repeatedly take the smallest uncovered
// residue and branch over every anchor whose translate covers it, ascending.
// The first anchor is pinned at 0 (any complement can be rotated onto 0).
// Returns the first complement found, or absent when the search space is
// exhausted. Rejects n < 1 and n not a multiple of #A.
std::optional<TilingCertificate> find_complement(const TileSet& A, long long n);

// Tiling decision pipeline: refute via the first divisibility condition,
// otherwise search certificates up to period_bound. When both conditions
// hold the search steps through multiples of the product of the prime-power
// divisors; otherwise through multiples of #A. Rejects period_bound < #A.
TilingVerdict tiles_Z(const TileSet& A, long long period_bound);
TilingVerdict tiles_Z(const TileSet& A, long long period_bound, const CycloProfile& prof);

// 4 * product of prime-power divisors when any exist, else 4 * span * #A;
// always at least #A and at most hard_cap.
long long default_period_bound(const TileSet& A, long long hard_cap = 1000000);

// Whether the residues of A mod #A are exactly {0, ..., #A-1}.
bool is_fundamental_domain(const TileSet& A);

/**
 * A = {0, d, 2d, ..., (p-1)d} with p = #A prime and d a power of p.
 * Such sets are exactly the masks equal to a single cyclotomic Phi_{p*d}.
 */
struct ProgressionForm {
  long long prime = 0;
  long long spacing = 0;

  bool operator==(const ProgressionForm&) const = default;
};

// Requires #A >= 2; absent when A is not of the above shape.
std::optional<ProgressionForm> progression_form(const TileSet& A);

// Exact recheck of the certificate's mask identity.
bool certificate_valid(const TileSet& A, const TilingCertificate& cert);

}  // namespace spectile
