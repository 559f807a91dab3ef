#include <gtest/gtest.h>

#include "logdisc/certificate.hpp"
#include "logdisc/discriminant.hpp"
#include "logdisc/primes.hpp"

namespace logdisc {
namespace {

TEST(BertrandPrime, SmallestInOpenInterval) {
  EXPECT_EQ(bertrand_prime(8), 5u);
  EXPECT_EQ(bertrand_prime(12), 7u);
  EXPECT_EQ(bertrand_prime(16), 11u);
  EXPECT_THROW(bertrand_prime(4), std::invalid_argument);
  EXPECT_THROW(bertrand_prime(10), std::invalid_argument);
  for (std::uint64_t n = 8; n <= 2000; n += 4) {
    const std::uint64_t ell = bertrand_prime(n);
    ASSERT_GT(2 * ell, n);
    ASSERT_LT(ell, n - 2);
    for (std::uint64_t c = n / 2 + 1; c < ell; ++c) ASSERT_FALSE(is_prime_u64(c));
  }
}

TEST(WitnessSearch, KnownWitnesses) {
  auto w = witness_search(333, 10);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->ell, 337u);
  EXPECT_EQ(w->residue, 157u);
  EXPECT_EQ(w->attempts, 1u);

  w = witness_search(33, 10);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->ell, 37u);
  EXPECT_EQ(w->residue, 14u);

  w = witness_search(505, 10);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->ell, 509u);
  EXPECT_EQ(w->residue, 200u);
}

TEST(WitnessSearch, BudgetExhaustionIsAbsence) {
  EXPECT_FALSE(witness_search(9, 0));
}

TEST(WitnessSearch, SkipsPrimesDividingPn) {
  // 4019 divides P_15 to the second power; it must never be a witness modulus.
  ASSERT_EQ(p_n_mod(15, 4019), 0u);
  EXPECT_EQ(disc_mod(15, 4019), 0u);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(6), Certificate{cert::NegativeSign{}});
  EXPECT_EQ(classify(13), (Certificate{cert::OddPrimePowerValuation{13, 1}}));
  EXPECT_EQ(classify(33), (Certificate{cert::NonResidueWitness{37, 14}}));
  EXPECT_EQ(classify(1), Certificate{cert::TrivialN1{}});
  EXPECT_EQ(classify(4), Certificate{cert::ExactNonSquare{}});
  EXPECT_EQ(classify(8), Certificate{cert::OddValuation{5}});
  EXPECT_EQ(classify(21), (Certificate{cert::SplitTheorem{3, 7}}));
  EXPECT_EQ(classify(125), (Certificate{cert::OddPrimePowerValuation{5, 3}}));
  EXPECT_TRUE(std::holds_alternative<cert::NonResidueWitness>(classify(25)));
  EXPECT_THROW(classify(0), std::invalid_argument);
}

TEST(Classify, FallbacksWhenWitnessBudgetIsZero) {
  ClassifyConfig exact_only{0, true, 1000};
  EXPECT_EQ(classify(9, exact_only), Certificate{cert::ExactNonSquare{}});
  ClassifyConfig nothing{0, false, 1000};
  EXPECT_EQ(classify(9, nothing), Certificate{cert::Unresolved{0}});
  ClassifyConfig capped{0, true, 5};
  EXPECT_EQ(classify(9, capped), Certificate{cert::Unresolved{0}});
}

TEST(Classify, DeterministicAndRoundTrips) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const Certificate c = classify(n);
    ASSERT_EQ(c, classify(n)) << "n=" << n;
    ASSERT_FALSE(std::holds_alternative<cert::Unresolved>(c)) << "n=" << n;
    ASSERT_FALSE(std::holds_alternative<cert::Counterexample>(c)) << "n=" << n;
    const Verification v = verify_certificate(n, c);
    ASSERT_TRUE(v.valid) << "n=" << n << ": " << v.diagnostic;
  }
}

TEST(Classify, NeverContradictsExactComputation) {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const Certificate c = classify(n);
    const Rational d = *disc_exact(n).exact;
    ASSERT_TRUE(asserts_non_square(c)) << "n=" << n;
    ASSERT_FALSE(is_rational_square(d)) << "n=" << n;
    if (const auto* ov = std::get_if<cert::OddValuation>(&c)) {
      EXPECT_EQ(std::abs(rat_valuation(d, to_integer(ov->ell))) % 2, 1) << "n=" << n;
    }
    if (const auto* pp = std::get_if<cert::OddPrimePowerValuation>(&c)) {
      EXPECT_EQ(std::abs(rat_valuation(d, to_integer(pp->p))) % 2, 1) << "n=" << n;
    }
    if (const auto* s = std::get_if<cert::SplitTheorem>(&c)) {
      EXPECT_EQ(std::abs(rat_valuation(d, to_integer(s->q))) % 2, 1) << "n=" << n;
    }
  }
}

TEST(Verify, Examples) {
  EXPECT_TRUE(verify_certificate(33, cert::NonResidueWitness{37, 14}));
  EXPECT_FALSE(verify_certificate(33, cert::NonResidueWitness{37, 15}));
  EXPECT_TRUE(verify_certificate(25, classify(25)));
  EXPECT_TRUE(verify_certificate(49, classify(49)));
}

TEST(Verify, RejectsForgedCertificates) {
  EXPECT_FALSE(verify_certificate(5, cert::NegativeSign{}));
  EXPECT_FALSE(verify_certificate(9, cert::OddValuation{5}));    // frame valuation 0 - 8 is even
  EXPECT_TRUE(verify_certificate(12, cert::OddValuation{3}));    // 1 - 11*2 is odd and 3 does not divide P_12
  EXPECT_FALSE(verify_certificate(12, cert::OddValuation{8}));   // not prime
  EXPECT_FALSE(verify_certificate(25, (cert::OddPrimePowerValuation{5, 2})));
  EXPECT_FALSE(verify_certificate(27, (cert::OddPrimePowerValuation{3, 2})));
  EXPECT_FALSE(verify_certificate(33, (cert::SplitTheorem{3, 11})));  // 11 lies in E_3
  EXPECT_FALSE(verify_certificate(35, (cert::SplitTheorem{5, 7})));   // 35 == 3 (mod 4)
  EXPECT_FALSE(verify_certificate(21, (cert::SplitTheorem{7, 3})));   // q < m
  EXPECT_FALSE(verify_certificate(33, cert::NonResidueWitness{31, 1}));  // ell < n
  EXPECT_FALSE(verify_certificate(33, cert::NonResidueWitness{41, 0}));
  EXPECT_FALSE(verify_certificate(2, cert::TrivialN1{}));
  EXPECT_FALSE(verify_certificate(4, cert::Counterexample{}));
  EXPECT_FALSE(verify_certificate(9, cert::Unresolved{200}));
  EXPECT_FALSE(verify_certificate(0, cert::NegativeSign{}));
}

TEST(Verify, Diagnostics) {
  const Verification v = verify_certificate(33, cert::NonResidueWitness{37, 15});
  EXPECT_NE(v.diagnostic.find("residue mismatch"), std::string::npos);
}

TEST(CertificateType, NamesAndClaims) {
  EXPECT_EQ(certificate_type(cert::SplitTheorem{3, 7}), "SplitTheorem");
  EXPECT_EQ(certificate_type(cert::Unresolved{}), "Unresolved");
  EXPECT_TRUE(asserts_non_square(cert::ExactNonSquare{}));
  EXPECT_FALSE(asserts_non_square(cert::TrivialN1{}));
  EXPECT_FALSE(asserts_non_square(cert::Counterexample{}));
}

}  // namespace
}  // namespace logdisc
