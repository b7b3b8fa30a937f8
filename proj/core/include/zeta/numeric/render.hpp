#pragma once

#include "zeta/exact/pi_power.hpp"
#include "zeta/numeric/big_float.hpp"

namespace zeta::numeric {

// coefficient * pi^k with absolute error below 2^-(precision_bits-8).
BigFloat render_pi_power(const exact::PiPower& value, long precision_bits);

}  // namespace zeta::numeric
