#include "zeta/numeric/polygamma.hpp"

#include "precision.hpp"
#include "zeta/errors.hpp"
#include "zeta/exact/cot_poly.hpp"
#include "zeta/numeric/hurwitz.hpp"
#include "zeta/numeric/render.hpp"

namespace zeta::numeric {

BigRational PolygammaOrder::point_value() const {
  return point == QuarterPoint::kOneQuarter ? BigRational(1, 4) : BigRational(3, 4);
}

BigFloat polygamma(const PolygammaOrder& q, long precision_bits) {
  internal::require_precision(precision_bits, "polygamma");
  if (q.order == 0) throw DomainError("polygamma: order 0 (digamma) is not supported");

  const BigInt m_factorial = factorial(q.order);
  // m! scales the Hurwitz error; ask for that many extra bits.
  const long inner_bits = precision_bits + internal::bit_length(m_factorial) + 1;
  const BigFloat hz = hurwitz_zeta(static_cast<long>(q.order) + 1, q.point_value(), inner_bits);
  const BigFloat scale = BigFloat::from_integer(q.order % 2 == 1 ? m_factorial : BigInt(-m_factorial),
                                                hz.precision_bits());
  return scale * hz;
}

PolygammaParts polygamma_parts(long s, long precision_bits) {
  internal::require_zeta_argument(s, "zeta_via_polygamma");
  internal::require_precision(precision_bits, "zeta_via_polygamma");
  const auto order = static_cast<unsigned>(s - 1);
  return PolygammaParts{polygamma({order, QuarterPoint::kOneQuarter}, precision_bits),
                        polygamma({order, QuarterPoint::kThreeQuarters}, precision_bits)};
}

BigFloat zeta_via_polygamma(long s, long precision_bits) {
  const PolygammaParts parts = polygamma_parts(s, precision_bits);
  const BigFloat sum = parts.at_one_quarter + parts.at_three_quarters;

  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(s));
  BigInt denominator = pow2 * (pow2 - 1) * factorial(static_cast<unsigned long>(s - 1));
  if (s % 2 == 1) denominator = -denominator;  // (-1)^s
  return sum / BigFloat::from_integer(denominator, sum.precision_bits());
}

BigFloat reflection_residual(long s, long precision_bits) {
  internal::require_precision(precision_bits, "reflection_residual");
  if (s < 2 || s % 2 != 0) {
    throw DomainError("reflection_residual: s must be an even integer >= 2");
  }
  const PolygammaParts parts = polygamma_parts(s, precision_bits);
  const BigFloat lhs = -(parts.at_one_quarter + parts.at_three_quarters);

  const BigInt q_at_one =
      exact::SharedCotChain::instance().value_at_one(static_cast<unsigned>(s - 1));
  const BigFloat rhs =
      render_pi_power(exact::PiPower{BigRational(q_at_one), static_cast<unsigned>(s)}, precision_bits);
  return abs(lhs - rhs);
}

}  // namespace zeta::numeric
