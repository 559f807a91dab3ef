#include "logdisc/crt.hpp"

#include <stdexcept>

namespace logdisc {

Congruence crt_combine(std::span<const Congruence> parts) {
  Congruence acc{0, 1};
  for (const Congruence& part : parts) {
    if (part.modulus <= 0) throw std::invalid_argument("crt_combine: modulus must be positive");
    Integer g;
    mpz_gcd(g.get_mpz_t(), acc.modulus.get_mpz_t(), part.modulus.get_mpz_t());
    if (g != 1) throw std::invalid_argument("crt_combine: moduli are not pairwise coprime");

    Integer r = part.residue % part.modulus;
    if (r < 0) r += part.modulus;
    // acc.residue + acc.modulus * t == r (mod part.modulus)
    Integer inv;
    mpz_invert(inv.get_mpz_t(), acc.modulus.get_mpz_t(), part.modulus.get_mpz_t());
    Integer t = ((r - acc.residue) * inv) % part.modulus;
    if (t < 0) t += part.modulus;
    acc.residue += acc.modulus * t;
    acc.modulus *= part.modulus;
  }
  return acc;
}

Integer symmetric_residue(const Congruence& c) {
  Integer r = c.residue % c.modulus;
  if (r < 0) r += c.modulus;
  if (2 * r > c.modulus) r -= c.modulus;
  return r;
}

}  // namespace logdisc
