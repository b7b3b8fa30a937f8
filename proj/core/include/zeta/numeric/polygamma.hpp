#pragma once

#include "zeta/big_rational.hpp"
#include "zeta/numeric/big_float.hpp"

namespace zeta::numeric {

// The only abscissae the polygamma route needs.
enum class QuarterPoint { kOneQuarter, kThreeQuarters };

// psi^(order)(point), the order-th derivative of the digamma function
// (equivalently the (order+1)-th derivative of ln Gamma).
struct PolygammaOrder {
  unsigned order = 1;
  QuarterPoint point = QuarterPoint::kOneQuarter;

  BigRational point_value() const;
};

// psi^(m)(z) = (-1)^(m+1) m! zeta(m+1, z), absolute error below
// 2^-(precision_bits-8). Order 0 (digamma) is rejected.
BigFloat polygamma(const PolygammaOrder& q, long precision_bits);

// zeta(s) = (-1)^s (psi^(s-1)(1/4) + psi^(s-1)(3/4)) / (2^s (2^s - 1) Gamma(s))
// for integer s >= 2, with Gamma(s) = (s-1)!.
BigFloat zeta_via_polygamma(long s, long precision_bits);

// The two summands of zeta_via_polygamma, for display.
struct PolygammaParts {
  BigFloat at_one_quarter;
  BigFloat at_three_quarters;
};
PolygammaParts polygamma_parts(long s, long precision_bits);

// |LHS - RHS| for the reflection identity at z = 1/4 and odd order s-1:
//   LHS = -(psi^(s-1)(1/4) + psi^(s-1)(3/4))
//   RHS = pi * d^(s-1)/dz^(s-1) cot(pi z) |_{z=1/4} = pi^s Q_{s-1}(1)
// with RHS taken from the exact cotangent chain. The error bound is the
// combined bound of both sides. Requires even s >= 2.
BigFloat reflection_residual(long s, long precision_bits);

}  // namespace zeta::numeric
