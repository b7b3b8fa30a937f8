#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "zeta/errors.hpp"
#include "zeta/exact/cot_poly.hpp"
#include "zeta/exact/exact_zeta.hpp"

namespace zeta::exact {
namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

TEST(CotPoly, IdentityIsQ0) {
  const CotPoly q0 = CotPoly::identity();
  EXPECT_EQ(q0.order(), 0u);
  EXPECT_EQ(q0, CotPoly(0, ints({0, 1})));
  EXPECT_TRUE(q0.satisfies_invariants());
}

TEST(CotPoly, TrailingZerosAreTrimmed) {
  const CotPoly p(3, ints({1, 0, 2, 0, 0}));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_FALSE(p.satisfies_invariants());
  EXPECT_TRUE(CotPoly(4, {}).is_zero());
  EXPECT_THROW(CotPoly(4, {}).leading(), DomainError);
}

TEST(DiffCotPoly, FirstDerivativeIsMinusOneMinusCSquared) {
  // d/dz cot(pi z) = -pi (cot^2 + 1)
  EXPECT_EQ(diff_cot_poly(CotPoly::identity()), CotPoly(1, ints({-1, 0, -1})));
}

TEST(DiffCotPoly, SecondDerivative) {
  // -Q1'(1 + c^2) = 2c (1 + c^2)
  EXPECT_EQ(diff_cot_poly(CotPoly(1, ints({-1, 0, -1}))), CotPoly(2, ints({0, 2, 0, 2})));
}

TEST(DiffCotPoly, ZeroPolynomialStaysZero) {
  const CotPoly next = diff_cot_poly(CotPoly(5, {}));
  EXPECT_TRUE(next.is_zero());
  EXPECT_EQ(next.order(), 6u);
}

TEST(DiffCotPoly, MatchesBracketedFactorisations) {
  CotChain chain;
  // -8 (c^2 + 1)(15c^4 + 15c^2 + 2) = -16 - 136c^2 - 240c^4 - 120c^6
  EXPECT_EQ(chain.at(5), CotPoly(5, ints({-16, 0, -136, 0, -240, 0, -120})));
  // -16 (c^2 + 1)(315c^6 + 525c^4 + 231c^2 + 17)
  EXPECT_EQ(chain.at(7),
            CotPoly(7, ints({-272, 0, -3968, 0, -12096, 0, -13440, 0, -5040})));
}

TEST(EvalAtOne, CoefficientSums) {
  CotChain chain;
  EXPECT_EQ(eval_at_one(chain.at(0)), 1);
  EXPECT_EQ(eval_at_one(chain.at(1)), -2);
  EXPECT_EQ(eval_at_one(chain.at(3)), -16);
  EXPECT_EQ(eval_at_one(chain.at(7)), -34816);
}

TEST(CotChain, InvariantsHoldThroughOrder101) {
  CotChain chain;
  for (unsigned n = 0; n <= 101; ++n) {
    const CotPoly& q = chain.at(n);
    ASSERT_TRUE(q.satisfies_invariants()) << "order " << n;
    ASSERT_EQ(q.degree(), static_cast<long>(n) + 1);
    BigInt lead = factorial(n);
    if (n % 2 == 1) lead = -lead;
    ASSERT_EQ(q.leading(), lead);
  }
}

TEST(CotChain, OddOrdersAreNegativeAtOne) {
  CotChain chain;
  for (unsigned s = 1; s <= 50; ++s) {
    EXPECT_LT(eval_at_one(chain.at(2 * s - 1)), 0) << "s = " << s;
  }
}

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(7), 5040);
}

TEST(ZetaEvenExact, ClosedForms) {
  EXPECT_EQ(zeta_even_exact(1), (PiPower{BigRational(1, 6), 2}));
  EXPECT_EQ(zeta_even_exact(2), (PiPower{BigRational(1, 90), 4}));
  EXPECT_EQ(zeta_even_exact(3), (PiPower{BigRational(1, 945), 6}));
  EXPECT_EQ(zeta_even_exact(4), (PiPower{BigRational(1, 9450), 8}));
  // zeta(12) = 691 pi^12 / 638512875
  EXPECT_EQ(zeta_even_exact(6), (PiPower{BigRational(691, 638512875), 12}));
}

TEST(ZetaEvenExact, RejectsZero) {
  EXPECT_THROW(zeta_even_exact(0), DomainError);
  CotChain chain;
  EXPECT_THROW(zeta_even_exact(0, chain), DomainError);
}

TEST(ZetaEvenExact, FreshEqualsSweep) {
  CotChain sweep;
  for (unsigned s = 1; s <= 30; ++s) (void)zeta_even_exact(s, sweep);
  EXPECT_EQ(sweep.size(), 60u);
  for (unsigned s : {1u, 7u, 19u, 30u}) {
    CotChain fresh;
    EXPECT_EQ(zeta_even_exact(s, fresh), zeta_even_exact(s, sweep));
    EXPECT_EQ(zeta_even_exact(s), zeta_even_exact(s, sweep));
  }
}

TEST(ZetaEvenExact, ConcurrentCallsAgree) {
  std::vector<PiPower> expected;
  CotChain reference;
  for (unsigned s = 1; s <= 24; ++s) expected.push_back(zeta_even_exact(s, reference));

  std::vector<std::vector<PiPower>> seen(4);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < seen.size(); ++t) {
    workers.emplace_back([t, &seen] {
      for (unsigned i = 0; i < 24; ++i) {
        const unsigned s = (t % 2 == 0) ? 24 - i : i + 1;
        seen[t].push_back(zeta_even_exact(s));
      }
    });
  }
  for (auto& w : workers) w.join();
  for (unsigned t = 0; t < seen.size(); ++t) {
    for (unsigned i = 0; i < 24; ++i) {
      const unsigned s = (t % 2 == 0) ? 24 - i : i + 1;
      EXPECT_EQ(seen[t][i], expected[s - 1]);
    }
  }
}

TEST(PiPower, RenderingsParseBack) {
  const PiPower v{BigRational(-11, 9450), 8};
  EXPECT_EQ(to_string(v), "(-11/9450) * pi^8");
  EXPECT_EQ(to_compact_string(v), "(-11/9450)*pi^8");
  EXPECT_EQ(parse_pi_power(to_string(v)), v);
  EXPECT_EQ(parse_pi_power(to_compact_string(v)), v);
  EXPECT_EQ(to_string(PiPower{BigRational(1), 0}), "(1) * pi^0");
  EXPECT_THROW(parse_pi_power("1/6 pi^2"), DomainError);
  EXPECT_THROW(parse_pi_power("(1/6)*pi^x"), DomainError);
}

}  // namespace
}  // namespace zeta::exact
