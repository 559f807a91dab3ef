#pragma once

#include <cstdint>

#include "logdisc/integer.hpp"

namespace logdisc {

// Deterministic Miller-Rabin over a fixed base set valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t x);

// Deterministic below 2^64. Larger inputs go through GMP's BPSW-based test,
// which is probabilistic in principle (no counterexample is known).
bool is_prime(const Integer& x);

// Smallest prime strictly greater than x (x >= 0).
Integer next_prime(const Integer& x);
std::uint64_t next_prime_u64(std::uint64_t x);

// Legendre symbol (a / ell) for an odd prime ell, by quadratic reciprocity.
// Throws std::invalid_argument if ell is 2 or not prime.
int legendre_symbol(const Integer& a, const Integer& ell);

}  // namespace logdisc
