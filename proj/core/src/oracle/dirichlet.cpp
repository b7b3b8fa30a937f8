#include "zeta/oracle/dirichlet.hpp"

#include <algorithm>

#include "../numeric/precision.hpp"
#include "zeta/oracle/bernoulli.hpp"

namespace zeta::oracle {
namespace {

using detail::MpfrValue;

// [lo, hi] with lo rounded down and hi rounded up at every step.
struct Enclosure {
  MpfrValue lo;
  MpfrValue hi;

  explicit Enclosure(mpfr_prec_t precision) : lo(precision), hi(precision) {}

  void add(const Enclosure& other) {
    mpfr_add(lo.get(), lo.get(), other.lo.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), other.hi.get(), MPFR_RNDU);
  }
};

// n^e for positive integer n.
Enclosure integer_power(unsigned long n, long e, mpfr_prec_t precision) {
  Enclosure out(precision);
  mpfr_set_ui(out.lo.get(), n, MPFR_RNDD);
  mpfr_set_ui(out.hi.get(), n, MPFR_RNDU);
  mpfr_pow_si(out.lo.get(), out.lo.get(), e, MPFR_RNDD);
  mpfr_pow_si(out.hi.get(), out.hi.get(), e, MPFR_RNDU);
  return out;
}

// c * [lo, hi] for rational c and a positive enclosure.
Enclosure scale(const mpq_class& c, const Enclosure& positive, mpfr_prec_t precision) {
  Enclosure c_enc(precision);
  mpfr_set_q(c_enc.lo.get(), c.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(c_enc.hi.get(), c.get_mpq_t(), MPFR_RNDU);
  Enclosure out(precision);
  if (sgn(c) >= 0) {
    mpfr_mul(out.lo.get(), c_enc.lo.get(), positive.lo.get(), MPFR_RNDD);
    mpfr_mul(out.hi.get(), c_enc.hi.get(), positive.hi.get(), MPFR_RNDU);
  } else {
    mpfr_mul(out.lo.get(), c_enc.lo.get(), positive.hi.get(), MPFR_RNDD);
    mpfr_mul(out.hi.get(), c_enc.hi.get(), positive.lo.get(), MPFR_RNDU);
  }
  return out;
}

// Upper bound on max(|lo|, |hi|), at bound precision.
ErrorBound magnitude(const Enclosure& e) {
  return std::max(ErrorBound::magnitude_of(e.lo.get()), ErrorBound::magnitude_of(e.hi.get()));
}

struct Attempt {
  bool converged = false;
  Enclosure value;
};

Attempt sum_with_tail(long s, unsigned long cutoff, mpfr_prec_t precision, long truncation_exponent) {
  Attempt out{false, Enclosure(precision)};
  Enclosure& total = out.value;
  // Smallest terms first.
  for (unsigned long n = cutoff - 1; n >= 1; --n) total.add(integer_power(n, -s, precision));

  // integral N^(1-s)/(s-1) and half term N^-s/2
  Enclosure integral = integer_power(cutoff, 1 - s, precision);
  mpfr_div_ui(integral.lo.get(), integral.lo.get(), static_cast<unsigned long>(s - 1), MPFR_RNDD);
  mpfr_div_ui(integral.hi.get(), integral.hi.get(), static_cast<unsigned long>(s - 1), MPFR_RNDU);
  Enclosure half = integer_power(cutoff, -s, precision);
  mpfr_div_2ui(half.lo.get(), half.lo.get(), 1, MPFR_RNDD);
  mpfr_div_2ui(half.hi.get(), half.hi.get(), 1, MPFR_RNDU);
  total.add(integral);
  total.add(half);

  // B_2j / (2j)! * s (s+1) ... (s+2j-2) * N^(-s-2j+1)
  mpq_class weight(mpz_class(s), mpz_class(2));  // s / 2!
  weight.canonicalize();
  ErrorBound previous;
  for (long j = 1;; ++j) {
    if (j > 1) {
      mpq_class step(mpz_class((s + 2 * j - 3) * (s + 2 * j - 2)), mpz_class((2 * j - 1) * (2 * j)));
      step.canonicalize();
      weight *= step;
    }
    const mpq_class c = bernoulli(static_cast<unsigned>(2 * j)).raw() * weight;
    const Enclosure term =
        scale(c, integer_power(cutoff, -s - 2 * j + 1, precision), precision);
    total.add(term);

    const ErrorBound size = magnitude(term);
    if (size.below_pow2(truncation_exponent)) {
      mpfr_sub(total.lo.get(), total.lo.get(), size.raw(), MPFR_RNDD);
      mpfr_add(total.hi.get(), total.hi.get(), size.raw(), MPFR_RNDU);
      out.converged = true;
      return out;
    }
    if (j > 1 && size >= previous) return out;
    previous = size;
  }
}

}  // namespace

BigFloat zeta_dirichlet(long s, long precision_bits) {
  internal::require_zeta_argument(s, "zeta_dirichlet");
  internal::require_precision(precision_bits, "zeta_dirichlet");

  unsigned long cutoff = static_cast<unsigned long>(precision_bits / 2 + 2 * s);
  mpfr_prec_t precision = precision_bits + 16 + internal::bit_length(cutoff);
  for (;;) {
    Attempt attempt = sum_with_tail(s, cutoff, precision, -(precision_bits + 2));
    if (!attempt.converged) {
      cutoff *= 2;
      continue;
    }
    const Enclosure& e = attempt.value;
    MpfrValue mid(precision);
    mpfr_add(mid.get(), e.lo.get(), e.hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    MpfrValue up(ErrorBound::kPrecision);
    MpfrValue down(ErrorBound::kPrecision);
    mpfr_sub(up.get(), e.hi.get(), mid.get(), MPFR_RNDU);
    mpfr_sub(down.get(), mid.get(), e.lo.get(), MPFR_RNDU);
    ErrorBound radius = std::max(ErrorBound::magnitude_of(up.get()), ErrorBound::magnitude_of(down.get()));
    if (radius.below_pow2(-(precision_bits - 8))) {
      return BigFloat::from_parts(mid.get(), std::move(radius));
    }
    precision += 32;
  }
}

}  // namespace zeta::oracle
