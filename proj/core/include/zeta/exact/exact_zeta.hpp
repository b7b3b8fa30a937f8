#pragma once

#include "zeta/exact/cot_poly.hpp"
#include "zeta/exact/pi_power.hpp"

namespace zeta::exact {

// zeta(2s) as an exact rational multiple of pi^(2s):
//
//   zeta(2s) = -pi * [d^(2s-1)/dz^(2s-1) cot(pi z)]_{z=1/4}
//              / (2^(2s) (2^(2s) - 1) (2s-1)!)
//            = -Q_{2s-1}(1) / (2^(2s) (2^(2s) - 1) (2s-1)!) * pi^(2s).
//
// Takes s and returns zeta(2s). Throws DomainError for s = 0.
PiPower zeta_even_exact(unsigned s);

// Same, drawing Q_{2s-1} from a caller-owned chain.
PiPower zeta_even_exact(unsigned s, CotChain& chain);

}  // namespace zeta::exact
