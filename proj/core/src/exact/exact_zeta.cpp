#include "zeta/exact/exact_zeta.hpp"

#include "zeta/errors.hpp"

namespace zeta::exact {
namespace {

PiPower assemble(unsigned s, const BigInt& q_at_one) {
  const unsigned two_s = 2 * s;
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, two_s);
  const BigInt denominator = pow2 * (pow2 - 1) * factorial(two_s - 1);
  return PiPower{BigRational(-q_at_one, denominator), two_s};
}

void require_positive(unsigned s) {
  if (s == 0) throw DomainError("zeta_even_exact: s must be >= 1 (zeta(0) is out of scope)");
}

}  // namespace

PiPower zeta_even_exact(unsigned s) {
  require_positive(s);
  return assemble(s, SharedCotChain::instance().value_at_one(2 * s - 1));
}

PiPower zeta_even_exact(unsigned s, CotChain& chain) {
  require_positive(s);
  return assemble(s, eval_at_one(chain.at(2 * s - 1)));
}

}  // namespace zeta::exact
