#include "zeta/numeric/hurwitz.hpp"

#include <optional>

#include "precision.hpp"
#include "zeta/errors.hpp"
#include "zeta/oracle/bernoulli.hpp"

namespace zeta::numeric {
namespace {

// Explicit terms plus tail for a fixed cutoff and working precision. Empty if
// the correction series starts growing before reaching the truncation target.
std::optional<BigFloat> evaluate(long s, const BigRational& a, long cutoff, mpfr_prec_t working,
                                 long truncation_exponent) {
  BigFloat sum(working);
  for (long k = 0; k < cutoff; ++k) {
    sum = sum + pow(BigFloat::from_rational(a + BigRational(k), working), -s);
  }

  const BigFloat x = BigFloat::from_rational(a + BigRational(cutoff), working);
  BigFloat tail = pow(x, 1 - s) / BigFloat::from_integer(s - 1, working) +
                  pow(x, -s) / BigFloat::from_integer(2L, working);

  // rising = s (s+1) ... (s+2j-2), even_factorial = (2j)!
  BigInt rising = s;
  BigInt even_factorial = 2;
  std::optional<ErrorBound> previous;
  const long max_corrections = 4 * cutoff + s;
  for (long j = 1; j <= max_corrections; ++j) {
    if (j > 1) {
      rising *= (s + 2 * j - 3) * (s + 2 * j - 2);
      even_factorial *= (2 * j - 1) * (2 * j);
    }
    const BigRational coefficient =
        oracle::bernoulli(static_cast<unsigned>(2 * j)) * BigRational(rising, even_factorial);
    const BigFloat term =
        BigFloat::from_rational(coefficient, working) * pow(x, -s - 2 * j + 1);
    tail = tail + term;

    const ErrorBound size = term.magnitude();
    if (size.below_pow2(truncation_exponent)) {
      return (sum + tail).widened(size);
    }
    if (previous && size >= *previous) return std::nullopt;
    previous = size;
  }
  return std::nullopt;
}

}  // namespace

BigFloat hurwitz_zeta(long s, const BigRational& a, long precision_bits) {
  internal::require_zeta_argument(s, "hurwitz_zeta");
  internal::require_precision(precision_bits, "hurwitz_zeta");
  if (a.sign() <= 0 || a > BigRational(1)) {
    throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  }

  // The leading term a^-s can be large; carry its bits on top of the target.
  const long magnitude_bits =
      s * (internal::bit_length(a.denominator()) - internal::bit_length(a.numerator()) + 1);
  const long target_exponent = -(precision_bits - 8);

  long cutoff = precision_bits + s;
  long guard = 24;
  for (;;) {
    const mpfr_prec_t working = precision_bits + magnitude_bits + guard +
                                internal::bit_length(static_cast<unsigned long>(cutoff)) +
                                internal::bit_length(static_cast<unsigned long>(s));
    auto result = evaluate(s, a, cutoff, working, -(precision_bits + 2));
    if (!result) {
      cutoff *= 2;
      continue;
    }
    if (result->error_bound().below_pow2(target_exponent)) return *std::move(result);
    guard += 32;
  }
}

}  // namespace zeta::numeric
