#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ewens {

using BigInteger = mpz_class;

// Exact rational scalar for the certification paths. Always stored reduced
// with a positive denominator.
class BigRational {
 public:
  BigRational() : value_(0) {}
  BigRational(long long num) : value_(static_cast<long>(num)) {}
  BigRational(long long num, long long den);
  explicit BigRational(const BigInteger& num) : value_(num) {}
  BigRational(const BigInteger& num, const BigInteger& den);

  // Accepts "p", "p/q" and plain decimals like "2.5" (parsed exactly).
  // Throws std::invalid_argument on anything else.
  static BigRational from_string(std::string_view text);

  // "p" when the denominator is 1, else "p/q".
  std::string str() const;

  double to_double() const { return value_.get_d(); }
  BigInteger numerator() const { return value_.get_num(); }
  BigInteger denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
  BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
  BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.value_ != b.value_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.value_ >= b.value_; }

 private:
  mpq_class value_;  // canonical: reduced, denominator > 0
};

BigRational pow(const BigRational& base, unsigned exponent);

BigInteger factorial_big(unsigned n);

// Exact binomial coefficient.
BigInteger binomial_big(unsigned n, unsigned k);

}  // namespace ewens
