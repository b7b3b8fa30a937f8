#pragma once

#include <string>

#include "zeta/big_rational.hpp"

namespace zeta::exact {

// coefficient * pi^pi_exponent, held exactly.
struct PiPower {
  BigRational coefficient;
  unsigned pi_exponent = 0;

  friend bool operator==(const PiPower&, const PiPower&) = default;
};

// "(p/q) * pi^k"; the compact form drops the spaces: "(p/q)*pi^k".
std::string to_string(const PiPower& value);
std::string to_compact_string(const PiPower& value);

// Inverse of both renderings above.
PiPower parse_pi_power(std::string_view text);

}  // namespace zeta::exact
