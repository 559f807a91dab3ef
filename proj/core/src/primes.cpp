#include "logdisc/primes.hpp"

#include <array>
#include <stdexcept>

#include "logdisc/modular.hpp"

namespace logdisc {

bool is_prime_u64(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (x % p == 0) return x == p;
  }
  if (x < 41 * 41) return true;

  std::uint64_t d = x - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Sinclair's seven bases: deterministic for every x < 2^64.
  static constexpr std::array<std::uint64_t, 7> kBases = {
      2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  for (std::uint64_t base : kBases) {
    const std::uint64_t a = base % x;
    if (a == 0) continue;
    std::uint64_t y = mod::pow(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      y = mod::mul(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& x) {
  if (x < 2) return false;
  if (fits_u64(x)) return is_prime_u64(to_u64(x));
  return mpz_probab_prime_p(x.get_mpz_t(), 25) != 0;
}

std::uint64_t next_prime_u64(std::uint64_t x) {
  if (x < 2) return 2;
  std::uint64_t c = x + 1;
  while (!is_prime_u64(c)) {
    if (c == UINT64_MAX) throw std::overflow_error("next_prime_u64 overflow");
    ++c;
  }
  return c;
}

Integer next_prime(const Integer& x) {
  if (x < 0) throw std::invalid_argument("next_prime: negative input");
  if (x < 2) return 2;
  Integer c = x + 1;
  while (!is_prime(c)) ++c;
  return c;
}

int legendre_symbol(const Integer& a, const Integer& ell) {
  if (ell == 2 || !is_prime(ell)) {
    throw std::invalid_argument("legendre_symbol: modulus must be an odd prime");
  }
  Integer top = a % ell;
  if (top < 0) top += ell;
  Integer bottom = ell;
  int result = 1;
  // Jacobi-symbol recursion; bottom stays odd and positive.
  while (top != 0) {
    while (mpz_even_p(top.get_mpz_t())) {
      top >>= 1;
      const unsigned long r8 = mpz_fdiv_ui(bottom.get_mpz_t(), 8);
      if (r8 == 3 || r8 == 5) result = -result;
    }
    std::swap(top, bottom);
    if (mpz_fdiv_ui(top.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(bottom.get_mpz_t(), 4) == 3) {
      result = -result;
    }
    top %= bottom;
  }
  return bottom == 1 ? result : 0;
}

}  // namespace logdisc
