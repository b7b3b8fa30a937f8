#include "zeta/numeric/big_float.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "zeta/errors.hpp"

namespace zeta {
namespace detail {

MpfrValue::MpfrValue(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

MpfrValue::MpfrValue(const MpfrValue& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

MpfrValue::MpfrValue(MpfrValue&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

MpfrValue& MpfrValue::operator=(const MpfrValue& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

MpfrValue& MpfrValue::operator=(MpfrValue&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

MpfrValue::~MpfrValue() { mpfr_clear(value_); }

}  // namespace detail

namespace {

using detail::MpfrValue;

// Decimal rendering of x. digits == 0 asks MPFR for the round-trip count.
std::string format_decimal(mpfr_srcptr x, std::size_t digits) {
  if (mpfr_zero_p(x)) return "0";
  if (!mpfr_number_p(x)) return mpfr_nan_p(x) ? "nan" : (mpfr_sgn(x) > 0 ? "inf" : "-inf");

  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, x, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // value = 0.mantissa * 10^exp10
  const long e = static_cast<long>(exp10);
  const long n = static_cast<long>(mantissa.size());
  if (e > -5 && e <= 21) {
    if (e <= 0) return sign + "0." + std::string(static_cast<std::size_t>(-e), '0') + mantissa;
    if (e >= n) return sign + mantissa + std::string(static_cast<std::size_t>(e - n), '0');
    return sign + mantissa.substr(0, static_cast<std::size_t>(e)) + "." +
           mantissa.substr(static_cast<std::size_t>(e));
  }
  std::string out = sign + mantissa.substr(0, 1);
  if (n > 1) out += "." + mantissa.substr(1);
  return out + "e" + std::to_string(e - 1);
}

// Half an ulp of a value freshly rounded to nearest at its own precision.
ErrorBound half_ulp(mpfr_srcptr rounded) {
  if (mpfr_zero_p(rounded)) return ErrorBound{};
  return ErrorBound::pow2(static_cast<long>(mpfr_get_exp(rounded)) -
                          static_cast<long>(mpfr_get_prec(rounded)) - 1);
}

ErrorBound rounding_error(mpfr_srcptr rounded, int ternary) {
  return ternary == 0 ? ErrorBound{} : half_ulp(rounded);
}

// max(|x| - e, 0) rounded down, at the bound precision.
MpfrValue lower_magnitude(mpfr_srcptr x, const ErrorBound& e) {
  MpfrValue out(ErrorBound::kPrecision);
  mpfr_abs(out.get(), x, MPFR_RNDD);
  mpfr_prec_round(out.get(), ErrorBound::kPrecision, MPFR_RNDD);
  mpfr_sub(out.get(), out.get(), e.raw(), MPFR_RNDD);
  if (mpfr_sgn(out.get()) < 0) mpfr_set_zero(out.get(), 1);
  return out;
}

}  // namespace

ErrorBound::ErrorBound() = default;

ErrorBound ErrorBound::pow2(long exponent) {
  ErrorBound out;
  mpfr_set_ui_2exp(out.value_.get(), 1, exponent, MPFR_RNDU);
  return out;
}

ErrorBound ErrorBound::magnitude_of(mpfr_srcptr x) {
  ErrorBound out;
  mpfr_abs(out.value_.get(), x, MPFR_RNDU);
  return out;
}

ErrorBound ErrorBound::parse(std::string_view text) {
  ErrorBound out;
  if (mpfr_set_str(out.value_.get(), std::string(text).c_str(), 10, MPFR_RNDN) != 0 ||
      !mpfr_number_p(out.value_.get()) || mpfr_sgn(out.value_.get()) < 0) {
    throw DomainError("ErrorBound: cannot parse '" + std::string(text) + "'");
  }
  return out;
}

bool ErrorBound::below_pow2(long exponent) const {
  return mpfr_cmp_ui_2exp(value_.get(), 1, exponent) < 0;
}

long ErrorBound::log2_ceil() const {
  if (is_zero()) return LONG_MIN;
  // value = m * 2^exp with 1/2 <= m < 1, so value <= 2^exp; equality at m = 1/2.
  const long exp = static_cast<long>(mpfr_get_exp(value_.get()));
  return mpfr_cmp_ui_2exp(value_.get(), 1, exp - 1) == 0 ? exp - 1 : exp;
}

double ErrorBound::to_double() const { return mpfr_get_d(value_.get(), MPFR_RNDU); }

std::string ErrorBound::to_string() const { return format_decimal(value_.get(), 0); }

ErrorBound& ErrorBound::operator+=(const ErrorBound& other) {
  mpfr_add(value_.get(), value_.get(), other.value_.get(), MPFR_RNDU);
  return *this;
}

ErrorBound operator*(const ErrorBound& a, const ErrorBound& b) {
  ErrorBound out;
  mpfr_mul(out.value_.get(), a.value_.get(), b.value_.get(), MPFR_RNDU);
  return out;
}

ErrorBound ErrorBound::times(unsigned long k) const {
  ErrorBound out;
  mpfr_mul_ui(out.value_.get(), value_.get(), k, MPFR_RNDU);
  return out;
}

bool operator==(const ErrorBound& a, const ErrorBound& b) {
  return mpfr_equal_p(a.value_.get(), b.value_.get()) != 0;
}

std::strong_ordering operator<=>(const ErrorBound& a, const ErrorBound& b) {
  const int c = mpfr_cmp(a.value_.get(), b.value_.get());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const ErrorBound& bound) {
  return os << format_decimal(bound.raw(), 4);
}

BigFloat::BigFloat(mpfr_prec_t precision_bits) : value_(precision_bits) {
  if (precision_bits < MPFR_PREC_MIN || precision_bits > MPFR_PREC_MAX) {
    throw DomainError("BigFloat: precision out of range");
  }
}

BigFloat::BigFloat(MpfrValue value, ErrorBound error)
    : value_(std::move(value)), error_(std::move(error)) {}

BigFloat BigFloat::from_integer(const BigInt& value, mpfr_prec_t precision_bits) {
  MpfrValue v(precision_bits);
  const int t = mpfr_set_z(v.get(), value.get_mpz_t(), MPFR_RNDN);
  ErrorBound e = rounding_error(v.get(), t);
  return BigFloat(std::move(v), std::move(e));
}

BigFloat BigFloat::from_integer(long value, mpfr_prec_t precision_bits) {
  MpfrValue v(precision_bits);
  const int t = mpfr_set_si(v.get(), value, MPFR_RNDN);
  ErrorBound e = rounding_error(v.get(), t);
  return BigFloat(std::move(v), std::move(e));
}

BigFloat BigFloat::from_rational(const BigRational& value, mpfr_prec_t precision_bits) {
  MpfrValue v(precision_bits);
  const int t = mpfr_set_q(v.get(), value.raw().get_mpq_t(), MPFR_RNDN);
  ErrorBound e = rounding_error(v.get(), t);
  return BigFloat(std::move(v), std::move(e));
}

BigFloat BigFloat::pi(mpfr_prec_t precision_bits) {
  MpfrValue v(precision_bits);
  const int t = mpfr_const_pi(v.get(), MPFR_RNDN);
  ErrorBound e = rounding_error(v.get(), t);
  return BigFloat(std::move(v), std::move(e));
}

BigFloat BigFloat::from_parts(mpfr_srcptr value, ErrorBound error) {
  MpfrValue v(mpfr_get_prec(value));
  mpfr_set(v.get(), value, MPFR_RNDN);
  return BigFloat(std::move(v), std::move(error));
}

BigFloat BigFloat::parse(std::string_view decimal, mpfr_prec_t precision_bits, ErrorBound error) {
  MpfrValue v(precision_bits);
  if (mpfr_set_str(v.get(), std::string(decimal).c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("BigFloat: cannot parse '" + std::string(decimal) + "'");
  }
  return BigFloat(std::move(v), std::move(error));
}

ErrorBound BigFloat::magnitude() const { return ErrorBound::magnitude_of(value()) + error_; }

BigFloat BigFloat::widened(const ErrorBound& extra) const {
  return BigFloat(value_, error_ + extra);
}

std::string BigFloat::to_string() const { return format_decimal(value(), 0); }

std::string BigFloat::to_string(int significant_digits) const {
  return format_decimal(value(), static_cast<std::size_t>(std::max(significant_digits, 1)));
}

int BigFloat::accurate_digits() const {
  const int full = static_cast<int>(std::ceil(static_cast<double>(precision_bits()) * std::log10(2.0)));
  if (error_.is_zero()) return full;
  if (mpfr_zero_p(value())) return 1;
  // |value| >= 2^(exp-1).
  const long bits = static_cast<long>(mpfr_get_exp(value())) - 1 - error_.log2_ceil();
  const int digits = static_cast<int>(std::floor(static_cast<double>(bits) * std::log10(2.0)));
  return std::clamp(digits, 1, full);
}

BigFloat BigFloat::operator-() const {
  MpfrValue v(precision_bits());
  mpfr_neg(v.get(), value(), MPFR_RNDN);
  return BigFloat(std::move(v), error_);
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  MpfrValue v(std::max(a.precision_bits(), b.precision_bits()));
  const int t = mpfr_add(v.get(), a.value(), b.value(), MPFR_RNDN);
  ErrorBound e = a.error_ + b.error_ + rounding_error(v.get(), t);
  return BigFloat(std::move(v), std::move(e));
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  MpfrValue v(std::max(a.precision_bits(), b.precision_bits()));
  const int t = mpfr_sub(v.get(), a.value(), b.value(), MPFR_RNDN);
  ErrorBound e = a.error_ + b.error_ + rounding_error(v.get(), t);
  return BigFloat(std::move(v), std::move(e));
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  MpfrValue v(std::max(a.precision_bits(), b.precision_bits()));
  const int t = mpfr_mul(v.get(), a.value(), b.value(), MPFR_RNDN);
  // |ab - a'b'| <= |a| e_b + |b| e_a + e_a e_b
  ErrorBound e = ErrorBound::magnitude_of(a.value()) * b.error_ +
                 ErrorBound::magnitude_of(b.value()) * a.error_ + a.error_ * b.error_ +
                 rounding_error(v.get(), t);
  return BigFloat(std::move(v), std::move(e));
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  const MpfrValue b_low = lower_magnitude(b.value(), b.error_);
  if (mpfr_zero_p(b_low.get())) {
    throw DomainError("BigFloat: divisor interval contains zero");
  }
  MpfrValue v(std::max(a.precision_bits(), b.precision_bits()));
  const int t = mpfr_div(v.get(), a.value(), b.value(), MPFR_RNDN);

  // |a/b - a'/b'| <= (|a| e_b + |b| e_a) / (|b| (|b| - e_b))
  const ErrorBound numerator = ErrorBound::magnitude_of(a.value()) * b.error_ +
                               ErrorBound::magnitude_of(b.value()) * a.error_;
  ErrorBound propagated;
  if (!numerator.is_zero()) {
    MpfrValue denom(ErrorBound::kPrecision);
    mpfr_abs(denom.get(), b.value(), MPFR_RNDD);
    mpfr_prec_round(denom.get(), ErrorBound::kPrecision, MPFR_RNDD);
    mpfr_mul(denom.get(), denom.get(), b_low.get(), MPFR_RNDD);
    MpfrValue q(ErrorBound::kPrecision);
    mpfr_div(q.get(), numerator.raw(), denom.get(), MPFR_RNDU);
    propagated = ErrorBound::magnitude_of(q.get());
  }
  ErrorBound e = propagated + rounding_error(v.get(), t);
  return BigFloat(std::move(v), std::move(e));
}

bool operator==(const BigFloat& a, const BigFloat& b) {
  return a.precision_bits() == b.precision_bits() && mpfr_equal_p(a.value(), b.value()) != 0 &&
         a.error_ == b.error_;
}

BigFloat abs(const BigFloat& x) { return x.sign() < 0 ? -x : x; }

BigFloat pow(const BigFloat& x, long n) {
  if (n == 0) return BigFloat::from_integer(1L, x.precision_bits());

  const MpfrValue low = lower_magnitude(x.value(), x.error_bound());
  if (n < 0 && mpfr_zero_p(low.get())) {
    throw DomainError("pow: negative power of an interval containing zero");
  }
  MpfrValue v(x.precision_bits());
  const int t = mpfr_pow_si(v.get(), x.value(), n, MPFR_RNDN);

  // Mean value theorem on t -> t^n over [|x| - e, |x| + e]:
  // |d/dt t^n| = |n| t^(n-1), largest at the upper end for n >= 1 and at the
  // lower end for n <= -1.
  ErrorBound propagated;
  if (!x.error_bound().is_zero() && n != 1) {
    MpfrValue end(ErrorBound::kPrecision);
    if (n > 1) {
      mpfr_abs(end.get(), x.value(), MPFR_RNDU);
      mpfr_prec_round(end.get(), ErrorBound::kPrecision, MPFR_RNDU);
      mpfr_add(end.get(), end.get(), x.error_bound().raw(), MPFR_RNDU);
    } else {
      mpfr_set(end.get(), low.get(), MPFR_RNDD);
    }
    mpfr_pow_si(end.get(), end.get(), n - 1, MPFR_RNDU);
    const unsigned long abs_n = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    propagated = ErrorBound::magnitude_of(end.get()).times(abs_n) * x.error_bound();
  } else if (n == 1) {
    propagated = x.error_bound();
  }
  ErrorBound e = propagated + rounding_error(v.get(), t);
  return BigFloat::from_parts(v.get(), std::move(e));
}

ErrorBound discrepancy(const BigFloat& a, const BigFloat& b) {
  MpfrValue d(std::max(a.precision_bits(), b.precision_bits()));
  mpfr_sub(d.get(), a.value(), b.value(), MPFR_RNDA);
  return ErrorBound::magnitude_of(d.get());
}

bool agree(const BigFloat& a, const BigFloat& b) {
  return discrepancy(a, b) <= a.error_bound() + b.error_bound();
}

bool certainly_less(const BigFloat& a, const BigFloat& b) {
  // a + e_a < b - e_b  <=>  b - a > e_a + e_b
  MpfrValue d(std::max(a.precision_bits(), b.precision_bits()));
  mpfr_sub(d.get(), b.value(), a.value(), MPFR_RNDD);
  if (mpfr_sgn(d.get()) <= 0) return false;
  return mpfr_cmp(d.get(), (a.error_bound() + b.error_bound()).raw()) > 0;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  return os << x.to_string(x.accurate_digits()) << " +/- " << x.error_bound();
}

}  // namespace zeta
