#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zeta {

using BigInt = mpz_class;

// Exact rational, always stored in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value);  // NOLINT(google-explicit-constructor)
  BigRational(BigInt value);  // NOLINT(google-explicit-constructor)
  BigRational(BigInt numerator, BigInt denominator);

  // Accepts "p" or "p/q" with optional sign on p.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  const mpq_class& raw() const { return value_; }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& other);
  BigRational& operator-=(const BigRational& other);
  BigRational& operator*=(const BigRational& other);
  BigRational& operator/=(const BigRational& other);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

 private:
  explicit BigRational(mpq_class value);

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace zeta
