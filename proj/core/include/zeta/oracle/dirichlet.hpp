#pragma once

#include "zeta/numeric/big_float.hpp"

namespace zeta::oracle {

// Reference zeta(s) = sum_{n>=1} n^-s for integer s >= 2, absolute error below
// 2^-(precision_bits-8).
//
// Independent of the Hurwitz/polygamma route: partial sums and the
// Euler-Maclaurin tail are carried as directed-rounding enclosures [lo, hi]
// rather than through BigFloat's error propagation, and the cutoffs differ.
// The returned value is the midpoint, the bound the half-width plus the
// truncation bound.
BigFloat zeta_dirichlet(long s, long precision_bits);

}  // namespace zeta::oracle
