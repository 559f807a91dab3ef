#include "logdisc/factor.hpp"

#include <vector>

#include "logdisc/arith.hpp"
#include "logdisc/primes.hpp"

namespace logdisc {

FactorizationBudgetExhausted::FactorizationBudgetExhausted(Integer cofactor)
    : std::runtime_error("factorization budget exhausted on cofactor " + cofactor.get_str(10)),
      cofactor_(std::move(cofactor)) {}

namespace {

// Brent's cycle-finding variant of Pollard rho with x -> x^2 + c. Returns a
// nontrivial divisor of n, or 0 once `budget` iterations are spent.
Integer brent_rho(const Integer& n, std::uint64_t& budget) {
  constexpr std::uint64_t kBatch = 128;
  for (unsigned long c = 1; budget > 0; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    auto step = [&](Integer& v) {
      v = (v * v + c) % n;
    };
    std::uint64_t r = 1;
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const std::uint64_t lim = std::min({kBatch, r - k, budget});
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        budget -= lim;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // The batched product overshot; replay one step at a time.
      do {
        step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

}  // namespace

FactorMap factorize(const Integer& x, const FactorOptions& options) {
  if (x < 2) throw std::invalid_argument("factorize: input must be >= 2");
  FactorMap factors;
  Integer n = x;

  for (std::uint64_t p : primes_upto(options.trial_bound)) {
    if (n == 1) break;
    const Integer P = to_integer(p);
    if (P * P > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      factors[P] += static_cast<unsigned>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t()));
    }
  }

  std::vector<Integer> pending;
  if (n != 1) pending.push_back(n);
  while (!pending.empty()) {
    Integer c = std::move(pending.back());
    pending.pop_back();
    if (is_prime(c)) {
      ++factors[c];
      continue;
    }
    if (mpz_perfect_square_p(c.get_mpz_t())) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), c.get_mpz_t());
      pending.push_back(root);
      pending.push_back(root);
      continue;
    }
    std::uint64_t budget = options.rho_iterations;
    Integer d = brent_rho(c, budget);
    if (d == 0) throw FactorizationBudgetExhausted(c);
    pending.push_back(c / d);
    pending.push_back(std::move(d));
  }
  return factors;
}

Integer multiply_out(const FactorMap& factors) {
  Integer product = 1;
  for (const auto& [p, mult] : factors) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), mult);
    product *= power;
  }
  return product;
}

}  // namespace logdisc
