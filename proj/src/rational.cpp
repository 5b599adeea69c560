#include "constructive/rational.hpp"

#include <cctype>

#include "constructive/error.hpp"

namespace constructive {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned fraction_digits) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, fraction_digits);
  BigInt num = ::abs(value_.get_num()) * scale;
  const BigInt& den = value_.get_den();
  BigInt scaled = (2 * num + den) / (2 * den);
  std::string digits = scaled.get_str();
  if (digits.size() <= fraction_digits) digits.insert(0, fraction_digits + 1 - digits.size(), '0');
  std::string out;
  if (sign() < 0 && scaled != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - fraction_digits);
  if (fraction_digits > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - fraction_digits);
  }
  return out;
}

Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ + y.value_)); }
Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ - y.value_)); }
Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ * y.value_)); }

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division of " + x.to_string() + " by zero");
  return Rational(mpq_class(x.value_ / y.value_));
}

Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }
Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }

Rational dyadic(int k) {
  if (k < 0) throw Error(ErrorKind::NegativePrecision, "precision exponent " + std::to_string(k));
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Rational(BigInt(1), den);
}

int ceil_log2(const Rational& q) {
  if (q.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "ceil_log2 of non-positive " + q.to_string());
  const BigInt num = q.numerator();
  const BigInt den = q.denominator();
  // 2^s >= num/den  <=>  den * 2^s >= num
  long s = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
  if (s < 0) s = 0;
  BigInt lhs = den << static_cast<mp_bitcnt_t>(s);
  while (lhs < num) {
    lhs <<= 1;
    ++s;
  }
  return static_cast<int>(s);
}

int precision_for(const Rational& eps) {
  if (eps.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "precision must be positive, got " + eps.to_string());
  if (eps >= Rational(1)) return 0;
  // 2^-k <= eps  <=>  2^k >= 1/eps
  return ceil_log2(Rational(1) / eps);
}

}  // namespace constructive
