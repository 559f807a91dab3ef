#pragma once

#include <cstdint>
#include <vector>

#include "logdisc/integer.hpp"
#include "logdisc/rational.hpp"

namespace logdisc {

struct PrimeValuation {
  Integer prime;
  long exponent = 0;

  friend bool operator==(const PrimeValuation&, const PrimeValuation&) = default;
};

// lcm(1, 2, ..., n); n >= 1.
Integer lcm_upto(std::uint64_t n);

// Exponent of p in lcm(1..n), i.e. floor(log_p n), by integer exponentiation.
unsigned floor_log(std::uint64_t n, std::uint64_t p);

// Largest e with p^e | x. Throws std::domain_error if x == 0.
unsigned long int_valuation(const Integer& x, const Integer& p);

// v_p(num) - v_p(den). Throws std::domain_error if r == 0.
long rat_valuation(const Rational& r, const Integer& p);

// H_m = 1 + 1/2 + ... + 1/m.
Rational harmonic(std::uint64_t m);

// True iff r >= 0 and numerator and denominator are perfect squares.
bool is_rational_square(const Rational& r);

// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

}  // namespace logdisc
