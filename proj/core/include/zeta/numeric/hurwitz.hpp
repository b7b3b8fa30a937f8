#pragma once

#include "zeta/big_rational.hpp"
#include "zeta/numeric/big_float.hpp"

namespace zeta::numeric {

// zeta(s, a) = sum_{k>=0} (k + a)^-s for integer s >= 2 and rational a in (0, 1].
//
// Sums the first N terms explicitly and replaces the rest with the
// Euler-Maclaurin tail
//
//   (N+a)^(1-s)/(s-1) + (N+a)^-s/2
//     + sum_{j=1}^{M} B_2j/(2j)! * s(s+1)...(s+2j-2) * (N+a)^(-s-2j+1).
//
// Every derivative of (x+a)^-s keeps one sign on [N, inf), so the remainder
// after M corrections is at most the M-th correction in magnitude; M grows
// until that term is below 2^-(precision_bits+2). Rounding is tracked through
// BigFloat, and the working precision is raised until the total bound is
// below 2^-(precision_bits-8).
//
// Throws PoleError for s = 1, DomainError for s < 1, a outside (0, 1], or a
// non-positive precision.
BigFloat hurwitz_zeta(long s, const BigRational& a, long precision_bits);

}  // namespace zeta::numeric
