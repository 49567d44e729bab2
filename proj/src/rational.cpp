#include "spectile/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace spectile {

Reduced::Reduced(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Reduced: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const long long g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Reduced Reduced::operator+(const Reduced& o) const {
  const long long g = std::gcd(den_, o.den_);
  const long long l = den_ / g * o.den_;
  return Reduced(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

Reduced Reduced::operator-(const Reduced& o) const {
  const long long g = std::gcd(den_, o.den_);
  const long long l = den_ / g * o.den_;
  return Reduced(num_ * (l / den_) - o.num_ * (l / o.den_), l);
}

Reduced Reduced::complement() const { return Reduced(den_ - num_, den_); }

Reduced Reduced::divided_by(long long k) const {
  if (k < 1) throw std::invalid_argument("Reduced::divided_by: k must be >= 1");
  return Reduced(num_, den_ * k);
}

std::strong_ordering Reduced::operator<=>(const Reduced& o) const {
  const __int128 lhs = static_cast<__int128>(num_) * o.den_;
  const __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Reduced::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Reduced> Reduced::parse(std::string_view text) {
  const auto slash = text.find('/');
  long long num = 0, den = 1;
  const char* b = text.data();
  if (slash == std::string_view::npos) {
    auto [p, ec] = std::from_chars(b, b + text.size(), num);
    if (ec != std::errc() || p != b + text.size()) return std::nullopt;
  } else {
    auto [p1, e1] = std::from_chars(b, b + slash, num);
    if (e1 != std::errc() || p1 != b + slash) return std::nullopt;
    auto [p2, e2] = std::from_chars(b + slash + 1, b + text.size(), den);
    if (e2 != std::errc() || p2 != b + text.size() || den == 0) return std::nullopt;
  }
  return Reduced(num, den);
}

}  // namespace spectile
