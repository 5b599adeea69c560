#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace constructive {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Values are immutable; every operation returns a new value.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& integer) : value_(integer) {}
  /// Throws Error(DivisionByZero) when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p" or "p/q" with an optional sign on p. Rejects q = 0.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  /// Display-only decimal expansion rounded half away from zero.
  std::string to_decimal(unsigned fraction_digits = 40) const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  /// Throws Error(DivisionByZero) when `y` is zero.
  friend Rational operator/(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& x, const Rational& y) { return cmp(x.value_, y.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return cmp(x.value_, y.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

Rational min(const Rational& x, const Rational& y);
Rational max(const Rational& x, const Rational& y);

/// 2^(-k). Throws Error(NegativePrecision) for k < 0.
Rational dyadic(int k);

/// Smallest k >= 0 with 2^(-k) <= eps. Throws Error(InvalidArgument) unless eps > 0.
int precision_for(const Rational& eps);

/// Smallest s >= 0 with 2^s >= q. Requires q > 0.
int ceil_log2(const Rational& q);

}  // namespace constructive
