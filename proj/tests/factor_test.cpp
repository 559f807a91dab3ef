#include <gtest/gtest.h>

#include "logdisc/factor.hpp"
#include "logdisc/primes.hpp"
#include "test_util.hpp"

namespace logdisc {
namespace {

using testing::big;
using testing::uniform;

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(12), (FactorMap{{2, 2}, {3, 1}}));
  EXPECT_EQ(factorize(3334111), (FactorMap{{11, 1}, {101, 1}, {3001, 1}}));
  EXPECT_EQ(factorize(big("306236856729921117043081411")),
            (FactorMap{{37, 1}, {229, 1}, {367, 1}, {big("98481394090065580021"), 1}}));
  EXPECT_EQ(factorize(2), (FactorMap{{2, 1}}));
  EXPECT_THROW(factorize(1), std::invalid_argument);
}

TEST(Factorize, NeedsRho) {
  // Both factors are far above the trial-division bound.
  const Integer p = big("1000000007");
  const Integer q = big("998244353");
  EXPECT_EQ(factorize(p * q), (FactorMap{{q, 1}, {p, 1}}));
  EXPECT_EQ(factorize(p * p * q), (FactorMap{{q, 1}, {p, 2}}));
  const Integer r = big("4294967291");
  EXPECT_EQ(factorize(p * q * r), (FactorMap{{q, 1}, {p, 1}, {r, 1}}));
}

TEST(Factorize, BudgetExhaustionNamesCofactor) {
  const Integer n = big("1000000007") * big("998244353");
  FactorOptions tight;
  tight.trial_bound = 100;
  tight.rho_iterations = 10;
  try {
    factorize(n * 6, tight);
    FAIL() << "expected FactorizationBudgetExhausted";
  } catch (const FactorizationBudgetExhausted& e) {
    EXPECT_EQ(e.cofactor(), n);
    EXPECT_NE(std::string(e.what()).find("factorization budget exhausted"), std::string::npos);
  }
}

TEST(Factorize, RemultipliesToInputWithPrimeKeys) {
  for (int trial = 0; trial < 200; ++trial) {
    Integer x = 1;
    for (long k = uniform(1, 4); k > 0; --k) {
      x *= to_integer(static_cast<std::uint64_t>(uniform(2, 4'000'000'000)));
    }
    if (x < 2) continue;
    const FactorMap f = factorize(x);
    ASSERT_EQ(multiply_out(f), x);
    for (const auto& [p, mult] : f) {
      ASSERT_TRUE(is_prime(p)) << p.get_str();
      ASSERT_GE(mult, 1u);
    }
  }
}

}  // namespace
}  // namespace logdisc
