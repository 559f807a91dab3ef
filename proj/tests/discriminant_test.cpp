#include <gtest/gtest.h>

#include <numeric>

#include "logdisc/discriminant.hpp"
#include "logdisc/modular.hpp"
#include "logdisc/primes.hpp"
#include "test_util.hpp"

namespace logdisc {
namespace {

using testing::big;

const Integer kP9 = big("1531") * big("3137311") * big("113564970051005791");

Integer p21_from_factor_list() {
  Integer p = 1;
  for (const char* f : {"3", "3", "3", "3", "3", "31", "41", "41", "335642497", "1236257387",
                        "11513876767", "1381773062083", "3484835094151",
                        "2204197718654031818404984907",
                        "90049891376102126355272132265856263101732032218747905873236753813403920291816681"}) {
    p *= big(f);
  }
  return p;
}

TEST(ReducedCoeffs, Examples) {
  const ReducedLogPoly r3 = reduced_coeffs(3);
  EXPECT_EQ(r3.lcm, 6);
  EXPECT_EQ(r3.a, (std::vector<Integer>{5, 3}));

  const ReducedLogPoly r2 = reduced_coeffs(2);
  EXPECT_EQ(r2.lcm, 2);
  EXPECT_EQ(r2.a, (std::vector<Integer>{1}));

  const ReducedLogPoly r9 = reduced_coeffs(9);
  EXPECT_EQ(r9.a.size(), 8u);
  EXPECT_EQ(r9.a[0], 2520 + 280 - 315);
  EXPECT_THROW(reduced_coeffs(1), std::invalid_argument);
}

TEST(ReducedCoeffs, Invariants) {
  for (std::uint64_t n = 3; n <= 80; ++n) {
    const ReducedLogPoly r = reduced_coeffs(n);
    ASSERT_EQ(r.a.size(), n - 1);
    ASSERT_NE(r.a.back(), 0) << "n=" << n;
    const Integer last = r.lcm / to_integer(n - 1);
    ASSERT_EQ(r.a[0], r.lcm + r.lcm / to_integer(n) - last);
    for (std::uint64_t k = 1; k + 2 <= n; ++k) ASSERT_EQ(r.a[k] + last, r.lcm / to_integer(k));
  }
}

TEST(FTilde, Examples) {
  EXPECT_EQ(f_tilde(2), (IntPoly{2, 2, 1}));
  EXPECT_EQ(f_tilde(3), (IntPoly{6, 6, 3, 2}));
  EXPECT_EQ(f_tilde(1), (IntPoly{1, 1}));
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const IntPoly f = f_tilde(n);
    ASSERT_EQ(f.degree(), static_cast<int>(n));
    ASSERT_EQ(f.leading(), lcm_upto(n) / to_integer(n));
  }
}

TEST(ReducedCoeffs, ReductionPreservesProductOverRoots) {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    EXPECT_EQ(resultant_prs(psi_poly(n), f_tilde(n)), resultant_prs(psi_poly(n), reduced_coeffs(n).as_poly()))
        << "n=" << n;
  }
}

TEST(PnExact, Examples) {
  EXPECT_EQ(p_n_exact(2), 1);
  EXPECT_EQ(p_n_exact(3), 19);
  EXPECT_EQ(p_n_exact(4), 725);
  EXPECT_EQ(p_n_exact(9), kP9);
  EXPECT_EQ(p_n_exact(21), p21_from_factor_list());
}

TEST(PnExact, PositiveAndMatchesPrsOracle) {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    const Integer p = p_n_exact(n);
    EXPECT_GT(p, 0) << "n=" << n;
    EXPECT_EQ(p, resultant_prs(psi_poly(n), reduced_coeffs(n).as_poly())) << "n=" << n;
  }
}

TEST(PnMod, Examples) {
  EXPECT_NE(p_n_mod(9, 3), 0u);
  EXPECT_EQ(p_n_mod(333, 37), 0u);
  EXPECT_EQ(p_n_mod(21, 3), 0u);
  EXPECT_EQ(p_n_mod(9, 101), mpz_fdiv_ui(kP9.get_mpz_t(), 101));
  EXPECT_THROW(p_n_mod(9, 91), std::invalid_argument);
}

TEST(PnMod, MatchesExactForSmallAndLargePrimes) {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    const Integer p = p_n_exact(n);
    for (std::uint64_t ell : primes_upto(n + 60)) {
      ASSERT_EQ(p_n_mod(n, ell), mpz_fdiv_ui(p.get_mpz_t(), ell)) << "n=" << n << " ell=" << ell;
    }
  }
}

TEST(Valuations, KnownFixtures) {
  const Integer p21 = p_n_exact(21);
  EXPECT_EQ(int_valuation(p21, 3), 5u);
  EXPECT_EQ(rat_valuation(*disc_exact(21).exact, 3), -34);
  EXPECT_EQ(int_valuation(p_n_exact(15), 4019), 2u);
  EXPECT_EQ(rat_valuation(*disc_exact(15).exact, 4019), 2);
}

TEST(DiscExact, Examples) {
  EXPECT_EQ(*disc_exact(4).exact, Rational(725, 432));
  EXPECT_EQ(*disc_exact(2).exact, Rational(-1));
  EXPECT_EQ(*disc_exact(3).exact, Rational(-19, 12));
  EXPECT_EQ(*disc_exact(1).exact, Rational(1));

  const DiscReport r9 = disc_exact(9);
  EXPECT_EQ(r9.sign, 1);
  EXPECT_EQ(*r9.p_n, kP9);
  // 9 / L_9^8 = (3 / (2^12 3^8 5^4 7^4))^2
  const Rational frame = Rational(3, big("4096") * big("6561") * big("625") * big("2401")).pow(2);
  EXPECT_EQ(*r9.exact, frame * Rational(kP9));
}

TEST(DiscExact, FrameValuationsReconstructFrame) {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const DiscReport r = disc_exact(n);
    Rational frame(1);
    for (const PrimeValuation& v : r.frame_valuations) {
      ASSERT_NE(v.exponent, 0);
      const Rational p(v.prime);
      frame *= v.exponent > 0 ? p.pow(static_cast<unsigned long>(v.exponent))
                              : Rational(1) / p.pow(static_cast<unsigned long>(-v.exponent));
    }
    Integer lpow;
    mpz_pow_ui(lpow.get_mpz_t(), lcm_upto(n).get_mpz_t(), n - 1);
    ASSERT_EQ(frame, Rational(to_integer(n), lpow)) << "n=" << n;
    ASSERT_EQ(*r.exact, Rational(r.sign) * frame * Rational(*r.p_n)) << "n=" << n;
  }
}

TEST(DiscExact, SignRule) {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const bool negative = n % 4 == 2 || n % 4 == 3;
    EXPECT_EQ(disc_exact(n).exact->sign() < 0, negative) << "n=" << n;
  }
}

TEST(DiscFromDefinition, Examples) {
  EXPECT_EQ(disc_from_definition(2), Rational(-1));
  EXPECT_EQ(disc_from_definition(3), Rational(-19, 12));
  EXPECT_EQ(disc_from_definition(4), Rational(725, 432));
}

TEST(DiscFromDefinition, AgreesWithFactoredForm) {
  for (std::uint64_t n = 2; n <= 64; ++n) {
    ASSERT_EQ(*disc_exact(n).exact, disc_from_definition(n)) << "n=" << n;
  }
}

TEST(DiscMod, KnownResidues) {
  EXPECT_EQ(disc_mod(333, 337), 157u);
  EXPECT_EQ(disc_mod(33, 37), 14u);
  EXPECT_EQ(disc_mod(77, 79), 39u);
  EXPECT_EQ(disc_mod(505, 509), 200u);
  EXPECT_EQ(disc_mod(685, 709), 443u);
}

TEST(DiscMod, Errors) {
  EXPECT_THROW(disc_mod(333, 331), std::domain_error);
  EXPECT_THROW(disc_mod(333, 333), std::invalid_argument);
  try {
    disc_mod(10, 7);
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "modulus too small");
  }
}

TEST(DiscMod, MatchesExactReduction) {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    const Rational d = *disc_exact(n).exact;
    for (std::uint64_t ell = next_prime_u64(n); ell < n + 500; ell = next_prime_u64(ell)) {
      ASSERT_EQ(disc_mod(n, ell), rational_mod(d, ell)) << "n=" << n << " ell=" << ell;
    }
  }
}

TEST(XOf, Examples) {
  EXPECT_EQ(x_of(2), Rational(-1, 2));
  EXPECT_EQ(x_of(3), Rational(13, 36));
  EXPECT_EQ(x_of(5), Rational(3334111, 12960000));
  EXPECT_EQ(x_of(7), Rational(big("1170728665999621"),
                              big("4096") * big("729") * big("15625") * big("117649")));
  EXPECT_THROW(x_of(1), std::invalid_argument);
}

TEST(XOf, MatchesPrsOracle) {
  for (std::uint64_t m = 2; m <= 16; ++m) {
    const Integer L = lcm_upto(m);
    std::vector<Integer> c(m);
    c[0] = L / to_integer(m);
    for (std::uint64_t j = 1; j < m; ++j) c[j] = L / to_integer(j);
    Integer denom;
    mpz_pow_ui(denom.get_mpz_t(), L.get_mpz_t(), m - 1);
    EXPECT_EQ(x_of(m), Rational(resultant_prs(psi_poly(m), IntPoly(c)), denom)) << "m=" << m;
  }
}

TEST(ExceptionalSet, KnownTable) {
  const XYProfile e3 = exceptional_set(3);
  EXPECT_EQ(e3.y, Rational(11, 6));
  EXPECT_EQ(e3.exceptional, (std::vector<Integer>{11}));
  EXPECT_EQ(exceptional_set(5).exceptional, (std::vector<Integer>{101, 137, 3001}));
  const XYProfile e7 = exceptional_set(7);
  EXPECT_EQ(e7.exceptional, (std::vector<Integer>{11}));
  const XYProfile e9 = exceptional_set(9);
  EXPECT_EQ(e9.y, Rational(7129, 2520));
  EXPECT_EQ(e9.exceptional, (std::vector<Integer>{37, 229, 7129, big("98481394090065580021")}));
}

TEST(ExceptionalSet, MembersSatisfyDefinition) {
  for (std::uint64_t m = 2; m <= 12; ++m) {
    const XYProfile e = exceptional_set(m);
    ASSERT_EQ(e.y, harmonic(m));
    ASSERT_TRUE(std::is_sorted(e.exceptional.begin(), e.exceptional.end()));
    for (const Integer& ell : e.exceptional) {
      EXPECT_GT(ell, to_integer(m));
      EXPECT_EQ(mpz_fdiv_ui(Integer(ell * to_integer(m)).get_mpz_t(), 4), 1u);
      EXPECT_TRUE(mpz_divisible_p(e.x.numerator().get_mpz_t(), ell.get_mpz_t()) ||
                  mpz_divisible_p(e.y.numerator().get_mpz_t(), ell.get_mpz_t()));
    }
  }
}

TEST(ExceptionalSet, BudgetExhaustionPropagates) {
  FactorOptions starved;
  starved.trial_bound = 2;
  starved.rho_iterations = 1;
  EXPECT_THROW(exceptional_set(9, starved), FactorizationBudgetExhausted);
}

TEST(PredictedResidues, PrimePowerExamples) {
  EXPECT_EQ(predicted_prime_power_residue(5, 2), p_n_mod(25, 5));
  EXPECT_EQ(predicted_prime_power_residue(3, 2), p_n_mod(9, 3));
  EXPECT_NE(predicted_prime_power_residue(3, 2), 0u);
  EXPECT_EQ(predicted_prime_power_residue(13, 1), p_n_mod(13, 13));
}

TEST(PredictedResidues, PrimePowerProperty) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned e = 1;; ++e) {
      std::uint64_t n = 1;
      for (unsigned i = 0; i < e; ++i) n *= p;
      if (n > 169) break;
      const std::uint64_t predicted = predicted_prime_power_residue(p, e);
      EXPECT_EQ(p_n_mod(n, p), predicted) << "n=" << n;
      EXPECT_NE(predicted, 0u) << "n=" << n;
    }
  }
}

TEST(PredictedResidues, SplitExamples) {
  EXPECT_EQ(predicted_split_residue(3, 7), p_n_mod(21, 7));
  EXPECT_EQ(predicted_split_residue(5, 13), p_n_mod(65, 13));
  EXPECT_EQ(predicted_split_residue(9, 37), 0u);
  EXPECT_THROW(predicted_split_residue(7, 7), std::invalid_argument);
  EXPECT_THROW(predicted_split_residue(9, 5), std::invalid_argument);
  EXPECT_THROW(predicted_split_residue(3, 9), std::invalid_argument);
}

TEST(PredictedResidues, SplitProperty) {
  int checked = 0;
  for (std::uint64_t m = 2; m <= 100; ++m) {
    for (std::uint64_t q = m + 1; m * q <= 200; ++q) {
      if (!is_prime_u64(q) || std::gcd(m, q) != 1) continue;
      EXPECT_EQ(p_n_mod(m * q, q), predicted_split_residue(m, q)) << "m=" << m << " q=" << q;
      ++checked;
    }
  }
  EXPECT_GT(checked, 30);
}

TEST(PredictedResidues, BertrandProperty) {
  for (std::uint64_t n = 8; n <= 100; n += 4) {
    std::uint64_t ell = n / 2 + 1;
    while (!is_prime_u64(ell)) ++ell;
    ASSERT_LT(ell, n - 2);
    const std::uint64_t predicted = predicted_bertrand_residue(n, ell);
    EXPECT_EQ(p_n_mod(n, ell), predicted) << "n=" << n;
    EXPECT_NE(predicted, 0u);
  }
}

}  // namespace
}  // namespace logdisc
