#include "zeta/big_rational.hpp"

#include <ostream>
#include <utility>

#include "zeta/errors.hpp"

namespace zeta {

BigRational::BigRational(long value) : value_(value) {}

BigRational::BigRational(BigInt value) : value_(std::move(value)) {}

BigRational::BigRational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) {
    throw DomainError("BigRational: zero denominator");
  }
  value_ = mpq_class(std::move(numerator), std::move(denominator));
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return BigRational(BigInt(std::string(text), 10));
    }
    return BigRational(BigInt(std::string(text.substr(0, slash)), 10),
                       BigInt(std::string(text.substr(slash + 1)), 10));
  } catch (const std::invalid_argument&) {
    throw DomainError("BigRational: cannot parse '" + std::string(text) + "'");
  }
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational& BigRational::operator+=(const BigRational& other) {
  value_ += other.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& other) {
  value_ -= other.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& other) {
  value_ *= other.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& other) {
  if (other.is_zero()) {
    throw DomainError("BigRational: division by zero");
  }
  value_ /= other.value_;
  return *this;
}

std::string BigRational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) {
  return os << value.to_string();
}

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace zeta
