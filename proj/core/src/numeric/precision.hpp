#pragma once

#include <string>

#include <mpfr.h>

#include "zeta/big_rational.hpp"
#include "zeta/errors.hpp"

namespace zeta::internal {

// Largest precision accepted at the public surface; far beyond desk use.
inline constexpr long kMaxPrecisionBits = 1L << 20;

inline void require_precision(long bits, const char* who) {
  if (bits <= 0 || bits > kMaxPrecisionBits) {
    throw DomainError(std::string(who) + ": precision_bits must be in 1.." +
                      std::to_string(kMaxPrecisionBits));
  }
}

inline void require_zeta_argument(long s, const char* who) {
  if (s == 1) throw PoleError();
  if (s < 2) throw DomainError(std::string(who) + ": s must be an integer >= 2");
}

inline long bit_length(const BigInt& n) {
  return n == 0 ? 0 : static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

inline long bit_length(unsigned long n) {
  long bits = 0;
  while (n != 0) {
    ++bits;
    n >>= 1;
  }
  return bits;
}

}  // namespace zeta::internal
