#include "zeta/numeric/render.hpp"

#include "precision.hpp"

namespace zeta::numeric {

BigFloat render_pi_power(const exact::PiPower& value, long precision_bits) {
  internal::require_precision(precision_bits, "render_pi_power");
  const auto& q = value.coefficient;
  // log2 |q pi^k| < bits(num) - bits(den) + 1 + 2k
  const long magnitude_bits = internal::bit_length(abs(q.numerator())) -
                              internal::bit_length(q.denominator()) + 1 +
                              2 * static_cast<long>(value.pi_exponent);
  const mpfr_prec_t working = precision_bits + std::max(0L, magnitude_bits) + 16 +
                              internal::bit_length(static_cast<unsigned long>(value.pi_exponent));
  return BigFloat::from_rational(q, working) *
         pow(BigFloat::pi(working), static_cast<long>(value.pi_exponent));
}

}  // namespace zeta::numeric
