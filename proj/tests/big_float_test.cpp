#include <random>

#include <gtest/gtest.h>

#include "zeta/errors.hpp"
#include "zeta/numeric/big_float.hpp"

namespace zeta {
namespace {

BigRational exact_value(const BigFloat& x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x.value());
  return BigRational(BigInt(q.get_num()), BigInt(q.get_den()));
}

BigRational exact_bound(const BigFloat& x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x.error_bound().raw());
  return BigRational(BigInt(q.get_num()), BigInt(q.get_den()));
}

// |value - truth| <= bound, decided in exact rational arithmetic.
::testing::AssertionResult encloses(const BigFloat& x, const BigRational& truth) {
  BigRational gap = exact_value(x) - truth;
  if (gap.sign() < 0) gap = -gap;
  if (gap <= exact_bound(x)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "gap " << gap << " exceeds bound " << x.error_bound();
}

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1'000'000'007L, 1'000'000'007L);
  std::uniform_int_distribution<long> den(1, 999'983L);
  long n = num(rng);
  if (n == 0) n = 1;
  return BigRational(BigInt(n), BigInt(den(rng)));
}

TEST(ErrorBound, Basics) {
  EXPECT_TRUE(ErrorBound().is_zero());
  EXPECT_EQ(ErrorBound::pow2(-10).log2_ceil(), -10);
  EXPECT_TRUE(ErrorBound::pow2(-10).below_pow2(-9));
  EXPECT_FALSE(ErrorBound::pow2(-10).below_pow2(-10));
  EXPECT_EQ((ErrorBound::pow2(-10) + ErrorBound::pow2(-10)), ErrorBound::pow2(-9));
  const ErrorBound odd = ErrorBound::pow2(-200) + ErrorBound::pow2(-230);
  EXPECT_EQ(ErrorBound::parse(odd.to_string()), odd);
  EXPECT_THROW(ErrorBound::parse("-1e-3"), DomainError);
}

TEST(BigFloat, ExactConversionsCarryNoError) {
  EXPECT_TRUE(BigFloat::from_integer(12345L, 64).error_bound().is_zero());
  EXPECT_TRUE(BigFloat::from_rational(BigRational(3, 4), 8).error_bound().is_zero());
  EXPECT_FALSE(BigFloat::from_rational(BigRational(1, 3), 64).error_bound().is_zero());
  EXPECT_TRUE(encloses(BigFloat::from_rational(BigRational(1, 3), 64), BigRational(1, 3)));
}

TEST(BigFloat, PiIsEnclosed) {
  // 355/113 is within 2.7e-7 of pi; at 20 bits the enclosure is wide enough,
  // at 64 bits it must not be.
  const BigFloat pi64 = BigFloat::pi(64);
  EXPECT_NEAR(pi64.to_double(), 3.141592653589793, 1e-15);
  EXPECT_TRUE(pi64.error_bound().below_pow2(-62));
}

TEST(BigFloat, DivisionByIntervalContainingZeroThrows) {
  const BigFloat tiny = BigFloat::from_parts(BigFloat::from_integer(1L, 32).value(), ErrorBound::pow2(1));
  EXPECT_THROW(BigFloat::from_integer(1L, 32) / tiny, DomainError);
  EXPECT_THROW(pow(tiny, -2), DomainError);
}

TEST(BigFloat, ParseRoundTrips) {
  const BigFloat x = BigFloat::from_rational(BigRational(22, 7), 150).widened(ErrorBound::pow2(-140));
  EXPECT_EQ(BigFloat::parse(x.to_string(), x.precision_bits(), x.error_bound()), x);
}

TEST(BigFloat, RenderingPicksNotation) {
  EXPECT_EQ(BigFloat::from_integer(0L, 32).to_string(), "0");
  EXPECT_EQ(BigFloat::from_rational(BigRational(1, 4), 8).to_string(3), "0.250");
  EXPECT_EQ(BigFloat::from_integer(-1536L, 16).to_string(4), "-1536");
  EXPECT_EQ(BigFloat::from_rational(BigRational(1, 1024 * 1024), 8).to_string(2), "9.5e-7");
}

// Random expression chains at low precision: the exact rational result must
// always lie inside the propagated enclosure.
TEST(BigFloatProperty, ArithmeticChainsStayEnclosed) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> op_pick(0, 4);
  std::uniform_int_distribution<long> prec_pick(12, 80);
  std::uniform_int_distribution<long> exp_pick(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const long prec = prec_pick(rng);
    BigRational truth = random_rational(rng);
    BigFloat x = BigFloat::from_rational(truth, prec);
    for (int step = 0; step < 6; ++step) {
      const BigRational r = random_rational(rng);
      const BigFloat y = BigFloat::from_rational(r, prec_pick(rng));
      switch (op_pick(rng)) {
        case 0: x = x + y; truth += r; break;
        case 1: x = x - y; truth -= r; break;
        case 2: x = x * y; truth *= r; break;
        case 3: x = x / y; truth /= r; break;
        case 4: {
          const long e = exp_pick(rng);
          if (e < 0 && (truth.is_zero() || x.error_bound() >= ErrorBound::magnitude_of(x.value()))) break;
          x = pow(x, e);
          BigRational p(1);
          for (long i = 0; i < (e < 0 ? -e : e); ++i) p *= truth;
          truth = e < 0 ? BigRational(1) / p : p;
          break;
        }
      }
      ASSERT_TRUE(encloses(x, truth)) << "trial " << trial << " step " << step;
    }
  }
}

TEST(BigFloatProperty, AgreeAndCertainlyLessAreConsistent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const BigRational a = random_rational(rng);
    const BigRational b = random_rational(rng);
    const BigFloat fa = BigFloat::from_rational(a, 24);
    const BigFloat fb = BigFloat::from_rational(b, 24);
    if (certainly_less(fa, fb)) EXPECT_LT(a, b);
    if (a == b) EXPECT_TRUE(agree(fa, fb));
    EXPECT_TRUE(agree(fa, BigFloat::from_rational(a, 90)));
  }
}

}  // namespace
}  // namespace zeta
