#include "spectile/intpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectile {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::one() { return constant(1); }

IntPoly IntPoly::constant(const mpz_class& c) {
  return IntPoly(std::vector<mpz_class>{c});
}

IntPoly IntPoly::monomial(std::size_t k, const mpz_class& coeff) {
  std::vector<mpz_class> v(k + 1, kZero);
  v[k] = coeff;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::xn_minus_one(long long n) {
  if (n < 1) throw std::invalid_argument("xn_minus_one: n must be >= 1");
  std::vector<mpz_class> v(static_cast<std::size_t>(n) + 1, kZero);
  v[0] = -1;
  v.back() = 1;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::all_ones(long long n) {
  if (n < 1) throw std::invalid_argument("all_ones: n must be >= 1");
  return IntPoly(std::vector<mpz_class>(static_cast<std::size_t>(n), 1));
}

const mpz_class& IntPoly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), kZero);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), kZero);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, kZero);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    const bool lead = s.empty();
    mpz_class a = c_[i];
    if (a < 0) {
      s += lead ? "-" : " - ";
      a = -a;
    } else if (!lead) {
      s += " + ";
    }
    if (a != 1 || i == 0) s += a.get_str();
    if (i > 0) {
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

IntPoly mask_poly(const TileSet& A) {
  std::vector<mpz_class> v(static_cast<std::size_t>(A.span()), kZero);
  for (long long a : A.elements()) v[static_cast<std::size_t>(a)] = 1;
  return IntPoly(std::move(v));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

DivRem poly_divrem(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("poly_divrem: zero divisor");
  if (!den.is_monic()) throw std::invalid_argument("poly_divrem: divisor must be monic");
  const int dn = num.degree();
  const int dd = den.degree();
  if (dn < dd) return {IntPoly(), num};

  std::vector<mpz_class> rem(num.coeffs());
  std::vector<mpz_class> quot(static_cast<std::size_t>(dn - dd) + 1, kZero);
  for (int k = dn; k >= dd; --k) {
    const mpz_class c = rem[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k - dd + i)] -= c * den.coeff(static_cast<std::size_t>(i));
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly poly_mod_cyclic(const IntPoly& p, long long m) {
  if (m < 1) throw std::invalid_argument("poly_mod_cyclic: modulus must be >= 1");
  std::vector<mpz_class> v(static_cast<std::size_t>(m), kZero);
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) v[k % static_cast<std::size_t>(m)] += c[k];
  return IntPoly(std::move(v));
}

}  // namespace spectile
