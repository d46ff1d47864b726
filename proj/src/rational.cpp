#include "ewens/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ewens {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRational::BigRational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  value_.canonicalize();
}

BigRational::BigRational(const BigInteger& num, const BigInteger& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::from_string(std::string_view text) {
  const std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
      throw std::invalid_argument("rational: expected p/q, got '" + s + "'");
    }
    BigRational r;
    r.value_ = mpq_class(mpz_class(num), mpz_class(den));
    if (sgn(r.value_.get_den()) == 0) throw std::invalid_argument("rational: zero denominator");
    r.value_.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (!is_integer_token(whole.empty() ? "0" : whole) || frac.empty() || !is_integer_token(frac)) {
      throw std::invalid_argument("rational: expected a plain decimal, got '" + s + "'");
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = mpz_class(whole.empty() || whole == "-" || whole == "+" ? "0" : whole);
    num = num * scale;
    if (negative) {
      num -= mpz_class(frac);
    } else {
      num += mpz_class(frac);
    }
    BigRational r;
    r.value_ = mpq_class(num, scale);
    r.value_.canonicalize();
    return r;
  }
  if (!is_integer_token(s)) {
    throw std::invalid_argument("rational: expected integer, p/q or decimal, got '" + s + "'");
  }
  BigRational r;
  r.value_ = mpq_class(mpz_class(s));
  return r;
}

std::string BigRational::str() const { return value_.get_str(); }

BigRational BigRational::operator-() const {
  BigRational r;
  r.value_ = -value_;
  return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
  value_ /= o.value_;
  return *this;
}

BigRational pow(const BigRational& base, unsigned exponent) {
  BigRational result(1);
  BigRational b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

BigInteger factorial_big(unsigned n) {
  BigInteger f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInteger binomial_big(unsigned n, unsigned k) {
  BigInteger b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace ewens
