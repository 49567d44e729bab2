#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "spectile/tileset.hpp"

namespace spectile {

/**
 * Dense integer polynomial with exact (arbitrary precision) coefficients.
 * coeff(k) is the coefficient of x^k; the zero polynomial has no
 * coefficients and degree -1. Representations are kept normalized: the
 * leading stored coefficient is nonzero.
 */
class IntPoly {
 public:
  IntPoly() = default;  // zero polynomial
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly one();
  static IntPoly constant(const mpz_class& c);
  // coeff * x^k
  static IntPoly monomial(std::size_t k, const mpz_class& coeff = 1);
  // x^n - 1, n >= 1
  static IntPoly xn_minus_one(long long n);
  // 1 + x + ... + x^(n-1), n >= 1
  static IntPoly all_ones(long long n);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const mpz_class& coeff(std::size_t k) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  mpz_class eval(const mpz_class& x) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  std::string str() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
};

// Mask polynomial sum_{a in A} x^a. Evaluates to #A at x = 1.
IntPoly mask_poly(const TileSet& A);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

// Long division by a monic divisor; exact over the integers.
// Rejects zero or non-monic divisors.
DivRem poly_divrem(const IntPoly& num, const IntPoly& den);

// Reduction mod x^m - 1 (exponents folded mod m), m >= 1.
IntPoly poly_mod_cyclic(const IntPoly& p, long long m);

}  // namespace spectile
