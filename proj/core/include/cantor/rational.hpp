#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace cantor {

/// Exact rational number backed by GMP, always kept in lowest terms.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral I, std::integral J>
  Rational(I num, J den) : value_(static_cast<long>(num), static_cast<long>(den)) {
    value_.canonicalize();
  }

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts `p/q` or a bare integer `p`; throws Error(Parse) otherwise.
  static Rational parse(std::string_view text);

  /// 2^{-k} as an exact rational.
  static Rational pow2_inverse(unsigned k);

  /// Renders as `p/q`, with `q = 1` spelled out.
  std::string str() const;

  /// Renders `digits` fractional digits, rounding half away from zero.
  std::string decimal(int digits) const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cantor
