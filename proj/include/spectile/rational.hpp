#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace spectile {

/**
 * Rational number reduced mod 1 into [0, 1), kept in lowest terms with a
 * positive denominator. The canonical form makes equality structural.
 */
class Reduced {
 public:
  Reduced() = default;  // 0/1
  Reduced(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  // Arithmetic mod 1.
  Reduced operator+(const Reduced& o) const;
  Reduced operator-(const Reduced& o) const;
  // 1 - this mod 1.
  Reduced complement() const;
  // this / k mod 1, k >= 1.
  Reduced divided_by(long long k) const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::strong_ordering operator<=>(const Reduced& o) const;
  bool operator==(const Reduced& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string str() const;
  static std::optional<Reduced> parse(std::string_view text);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace spectile
