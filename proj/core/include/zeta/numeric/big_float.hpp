#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "zeta/big_rational.hpp"

namespace zeta {
namespace detail {

// Owning mpfr_t. Copies keep the source precision.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t precision);
  MpfrValue(const MpfrValue& other);
  MpfrValue(MpfrValue&& other) noexcept;
  MpfrValue& operator=(const MpfrValue& other);
  MpfrValue& operator=(MpfrValue&& other) noexcept;
  ~MpfrValue();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
};

}  // namespace detail

// Non-negative, finite upper bound on an absolute error. Every operation
// rounds toward +inf so the bound never shrinks below the true quantity.
class ErrorBound {
 public:
  static constexpr mpfr_prec_t kPrecision = 64;

  ErrorBound();

  static ErrorBound pow2(long exponent);
  // |x|, rounded up.
  static ErrorBound magnitude_of(mpfr_srcptr x);
  static ErrorBound parse(std::string_view text);

  bool is_zero() const { return mpfr_zero_p(value_.get()) != 0; }
  // Strictly below 2^exponent.
  bool below_pow2(long exponent) const;
  // Smallest e with bound <= 2^e; LONG_MIN for a zero bound.
  long log2_ceil() const;
  double to_double() const;
  // Round-trips exactly through parse().
  std::string to_string() const;

  mpfr_srcptr raw() const { return value_.get(); }

  ErrorBound& operator+=(const ErrorBound& other);
  friend ErrorBound operator+(ErrorBound a, const ErrorBound& b) { return a += b; }
  friend ErrorBound operator*(const ErrorBound& a, const ErrorBound& b);
  ErrorBound times(unsigned long k) const;

  friend bool operator==(const ErrorBound& a, const ErrorBound& b);
  friend std::strong_ordering operator<=>(const ErrorBound& a, const ErrorBound& b);

 private:
  detail::MpfrValue value_{kPrecision};
};

std::ostream& operator<<(std::ostream& os, const ErrorBound& bound);

// Arbitrary-precision value with a conservative absolute error bound: the
// quantity it stands for lies in [value - error_bound, value + error_bound].
// Arithmetic rounds to nearest at the wider operand precision and folds both
// the propagated input error and the new rounding error into the result.
class BigFloat {
 public:
  // Exact zero.
  explicit BigFloat(mpfr_prec_t precision_bits);

  static BigFloat from_integer(const BigInt& value, mpfr_prec_t precision_bits);
  static BigFloat from_integer(long value, mpfr_prec_t precision_bits);
  static BigFloat from_rational(const BigRational& value, mpfr_prec_t precision_bits);
  static BigFloat pi(mpfr_prec_t precision_bits);
  // Takes the value at its own precision.
  static BigFloat from_parts(mpfr_srcptr value, ErrorBound error);
  static BigFloat parse(std::string_view decimal, mpfr_prec_t precision_bits, ErrorBound error);

  mpfr_prec_t precision_bits() const { return value_.precision(); }
  const ErrorBound& error_bound() const { return error_; }
  mpfr_srcptr value() const { return value_.get(); }

  int sign() const { return mpfr_sgn(value_.get()); }
  double to_double() const { return mpfr_get_d(value_.get(), MPFR_RNDN); }
  // Upper bound on the magnitude of the represented quantity.
  ErrorBound magnitude() const;

  BigFloat widened(const ErrorBound& extra) const;

  // Enough decimal digits to reproduce the value exactly via parse().
  std::string to_string() const;
  std::string to_string(int significant_digits) const;
  // Significant decimal digits backed by the error bound (at least 1).
  int accurate_digits() const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  // Throws DomainError if b's interval contains zero.
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  // Same value, same precision, same bound.
  friend bool operator==(const BigFloat& a, const BigFloat& b);

 private:
  BigFloat(detail::MpfrValue value, ErrorBound error);

  detail::MpfrValue value_;
  ErrorBound error_;
};

BigFloat abs(const BigFloat& x);
// x^n for integer n; n < 0 requires x's interval to exclude zero.
BigFloat pow(const BigFloat& x, long n);

// Upper bound on |a.value() - b.value()|.
ErrorBound discrepancy(const BigFloat& a, const BigFloat& b);
// The two enclosures overlap.
bool agree(const BigFloat& a, const BigFloat& b);
// Every point of a's enclosure is below every point of b's.
bool certainly_less(const BigFloat& a, const BigFloat& b);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace zeta
