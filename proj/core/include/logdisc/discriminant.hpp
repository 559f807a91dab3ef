#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "logdisc/arith.hpp"
#include "logdisc/factor.hpp"
#include "logdisc/integer.hpp"
#include "logdisc/polynomial.hpp"
#include "logdisc/rational.hpp"

namespace logdisc {

// L_n * F_n reduced modulo the relations theta^n = 1 and Psi_n(theta) = 0:
//   a_0 = L + L/n - L/(n-1),   a_k = L/k - L/(n-1)   (1 <= k <= n-2).
struct ReducedLogPoly {
  std::uint64_t n = 0;
  Integer lcm;
  std::vector<Integer> a;

  IntPoly as_poly() const { return IntPoly(a); }
};

struct DiscReport {
  std::uint64_t n = 0;
  int sign = 1;                               // (-1)^(n(n-1)/2)
  std::optional<Integer> p_n;                 // product of L_n F_n over nontrivial n-th roots of unity
  std::vector<PrimeValuation> frame_valuations;  // nonzero v_p of n / L_n^(n-1)
  std::optional<Rational> exact;
};

struct XYProfile {
  std::uint64_t m = 0;
  Rational x;
  Rational y;
  std::vector<Integer> exceptional;  // sorted ascending
};

ReducedLogPoly reduced_coeffs(std::uint64_t n);

// L_n * F_n(x) = L_n + sum_{k=1}^n (L_n / k) x^k.
IntPoly f_tilde(std::uint64_t n);

int disc_sign(std::uint64_t n);
std::vector<PrimeValuation> frame_valuations(std::uint64_t n);

// (L_n / k) mod ell for 1 <= k <= n and any prime ell < 2^32, including
// ell <= n where L_n itself vanishes mod ell.
std::uint64_t lcm_quotient_mod(std::uint64_t n, std::uint64_t k, std::uint64_t ell);

Integer p_n_exact(std::uint64_t n);
std::uint64_t p_n_mod(std::uint64_t n, std::uint64_t ell);

DiscReport disc_exact(std::uint64_t n);

// (-1)^C(n,2) a_n^-1 Res(F_n, F_n') evaluated from the definition through
// the subresultant PRS. Oracle only; cost grows quickly past n ~ 64.
Rational disc_from_definition(std::uint64_t n);

// disc(F_n) mod ell for a prime ell > n. Throws std::domain_error otherwise.
std::uint64_t disc_mod(std::uint64_t n, std::uint64_t ell);

// X(m) = prod_{k=1}^{m-1} (1/m + sum_{j=1}^{m-1} w^(jk) / j), w = exp(2 pi i / m).
Rational x_of(std::uint64_t m);

// X(m), Y(m) = H_m and E_m: primes ell > m with m ell == 1 (mod 4) dividing
// the numerator of X(m) or of Y(m). Propagates FactorizationBudgetExhausted.
XYProfile exceptional_set(std::uint64_t m, const FactorOptions& options = {});

// (L_n / n)^(n-1) mod p for n = p^e.
std::uint64_t predicted_prime_power_residue(std::uint64_t p, unsigned e);

// (L_{mq} / q)^(mq-1) X(m)^q Y(m)^(q-1) mod q. Requires q prime and q > m;
// throws std::invalid_argument("theorem hypotheses violated") otherwise.
std::uint64_t predicted_split_residue(std::uint64_t m, std::uint64_t q);

// -(L_n / ell)^(n-1) mod ell for n == 0 (mod 4) and a prime ell in (n/2, n-2).
std::uint64_t predicted_bertrand_residue(std::uint64_t n, std::uint64_t ell);

// r mod ell for a rational whose denominator is a unit mod ell.
std::uint64_t rational_mod(const Rational& r, std::uint64_t ell);

}  // namespace logdisc
