#include "logdisc/arith.hpp"

#include <stdexcept>

namespace logdisc {

std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

unsigned floor_log(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("floor_log: base must be >= 2");
  unsigned e = 0;
  for (std::uint64_t power = 1; power <= n / p; power *= p) ++e;
  return e;
}

Integer lcm_upto(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("lcm_upto: n must be >= 1");
  Integer result = 1;
  for (std::uint64_t p : primes_upto(n)) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), p, floor_log(n, p));
    result *= power;
  }
  return result;
}

unsigned long int_valuation(const Integer& x, const Integer& p) {
  if (x == 0) throw std::domain_error("valuation of zero undefined");
  if (p < 2) throw std::invalid_argument("valuation base must be a prime");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

long rat_valuation(const Rational& r, const Integer& p) {
  if (r.is_zero()) throw std::domain_error("valuation of zero undefined");
  return static_cast<long>(int_valuation(r.numerator(), p)) -
         static_cast<long>(int_valuation(r.denominator(), p));
}

Rational harmonic(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("harmonic: m must be >= 1");
  // Common denominator L_m keeps the sum in integers until the final reduction.
  const Integer L = lcm_upto(m);
  Integer num = 0;
  for (std::uint64_t k = 1; k <= m; ++k) num += L / to_integer(k);
  return Rational(num, L);
}

namespace {

bool is_perfect_square(const Integer& x) {
  if (x < 0) return false;
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
  return rem == 0;
}

}  // namespace

bool is_rational_square(const Rational& r) {
  return r.sign() >= 0 && is_perfect_square(r.numerator()) &&
         is_perfect_square(r.denominator());
}

}  // namespace logdisc
