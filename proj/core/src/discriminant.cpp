#include "logdisc/discriminant.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "logdisc/modular.hpp"
#include "logdisc/primes.hpp"

namespace logdisc {

namespace {

Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void require_field_prime(std::uint64_t ell) {
  if (ell >= PrimeFieldPoly::kMaxModulus || !is_prime_u64(ell)) {
    throw std::invalid_argument("modulus must be a prime below 2^32");
  }
}

// (L_n / k) mod ell for all 1 <= k <= n. With e = v_ell(L_n), the quotient
// vanishes unless v_ell(k) = e, in which case it is (L_n / ell^e) / (k / ell^e).
class LcmQuotients {
 public:
  LcmQuotients(std::uint64_t n, std::uint64_t ell) : n_(n), ell_(ell), e_(floor_log(n, ell)) {
    for (std::uint64_t p : primes_upto(n)) {
      if (p != ell) cofactor_ = mod::mul(cofactor_, mod::pow(p, floor_log(n, p), ell), ell);
    }
  }

  std::uint64_t operator()(std::uint64_t k) const {
    if (k == 0 || k > n_) throw std::invalid_argument("lcm_quotient_mod: need 1 <= k <= n");
    unsigned vk = 0;
    while (k % ell_ == 0) {
      k /= ell_;
      ++vk;
    }
    if (vk < e_) return 0;
    return mod::mul(cofactor_, mod::inv(k % ell_, ell_), ell_);
  }

 private:
  std::uint64_t n_;
  std::uint64_t ell_;
  unsigned e_;
  std::uint64_t cofactor_ = 1;
};

// A_n with every coefficient reduced mod ell.
PrimeFieldPoly reduced_poly_mod(std::uint64_t n, std::uint64_t ell) {
  const LcmQuotients quotient(n, ell);
  const std::uint64_t last = quotient(n - 1);
  std::vector<std::uint64_t> a(n - 1);
  a[0] = mod::sub(mod::add(quotient(1), quotient(n), ell), last, ell);
  for (std::uint64_t k = 1; k + 2 <= n; ++k) a[k] = mod::sub(quotient(k), last, ell);
  return PrimeFieldPoly(ell, std::move(a));
}

}  // namespace

ReducedLogPoly reduced_coeffs(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("reduced_coeffs: n must be >= 2");
  ReducedLogPoly r;
  r.n = n;
  r.lcm = lcm_upto(n);
  const Integer last = r.lcm / to_integer(n - 1);
  r.a.reserve(n - 1);
  r.a.push_back(r.lcm + r.lcm / to_integer(n) - last);
  for (std::uint64_t k = 1; k + 2 <= n; ++k) r.a.push_back(r.lcm / to_integer(k) - last);
  return r;
}

IntPoly f_tilde(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("f_tilde: n must be >= 1");
  const Integer L = lcm_upto(n);
  std::vector<Integer> c(n + 1);
  c[0] = L;
  for (std::uint64_t k = 1; k <= n; ++k) c[k] = L / to_integer(k);
  return IntPoly(std::move(c));
}

int disc_sign(std::uint64_t n) { return (n % 4 == 2 || n % 4 == 3) ? -1 : 1; }

std::vector<PrimeValuation> frame_valuations(std::uint64_t n) {
  std::vector<PrimeValuation> out;
  if (n < 2) return out;
  const Integer N = to_integer(n);
  for (std::uint64_t p : primes_upto(n)) {
    const Integer P = to_integer(p);
    const long v = static_cast<long>(int_valuation(N, P)) -
                   static_cast<long>(n - 1) * static_cast<long>(floor_log(n, p));
    if (v != 0) out.push_back({P, v});
  }
  return out;
}

std::uint64_t lcm_quotient_mod(std::uint64_t n, std::uint64_t k, std::uint64_t ell) {
  require_field_prime(ell);
  return LcmQuotients(n, ell)(k);
}

Integer p_n_exact(std::uint64_t n) {
  const IntPoly a = reduced_coeffs(n).as_poly();
  return resultant_exact(psi_poly(n), a, product_bound(a, n - 1));
}

std::uint64_t p_n_mod(std::uint64_t n, std::uint64_t ell) {
  if (n < 2) throw std::invalid_argument("p_n_mod: n must be >= 2");
  require_field_prime(ell);
  return resultant_mod_p(psi_poly(n).reduce(ell), reduced_poly_mod(n, ell));
}

DiscReport disc_exact(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("disc_exact: n must be >= 1");
  DiscReport report;
  report.n = n;
  report.sign = disc_sign(n);
  if (n == 1) {
    report.p_n = Integer(1);
    report.exact = Rational(1);
    return report;
  }
  report.p_n = p_n_exact(n);
  report.frame_valuations = frame_valuations(n);
  const Integer L = lcm_upto(n);
  report.exact = Rational(report.sign * to_integer(n) * *report.p_n, power(L, n - 1));
  return report;
}

Rational disc_from_definition(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("disc_from_definition: n must be >= 2");
  const Integer L = lcm_upto(n);
  const IntPoly scaled = f_tilde(n);
  const IntPoly scaled_derivative = scaled.derivative();
  // Res(P/L, Q/L) = Res(P, Q) / L^(deg P + deg Q).
  const Rational res(resultant_prs(scaled, scaled_derivative),
                     power(L, static_cast<unsigned long>(scaled.degree() + scaled_derivative.degree())));
  const Rational lead(scaled.leading(), L);
  return Rational(disc_sign(n)) * res / lead;
}

std::uint64_t disc_mod(std::uint64_t n, std::uint64_t ell) {
  if (n < 2) throw std::invalid_argument("disc_mod: n must be >= 2");
  require_field_prime(ell);
  if (ell <= n) throw std::domain_error("modulus too small");
  const std::uint64_t lcm_mod = lcm_quotient_mod(n, 1, ell);
  const std::uint64_t frame =
      mod::mul(n % ell, mod::inv(mod::pow(lcm_mod, n - 1, ell), ell), ell);
  std::uint64_t value = mod::mul(frame, p_n_mod(n, ell), ell);
  if (disc_sign(n) < 0) value = mod::sub(0, value, ell);
  return value;
}

Rational x_of(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("x_of: m must be >= 2");
  const Integer L = lcm_upto(m);
  std::vector<Integer> c(m);
  c[0] = L / to_integer(m);
  for (std::uint64_t j = 1; j < m; ++j) c[j] = L / to_integer(j);
  const IntPoly g(std::move(c));
  const Integer res = resultant_exact(psi_poly(m), g, product_bound(g, m - 1));
  return Rational(res, power(L, m - 1));
}

XYProfile exceptional_set(std::uint64_t m, const FactorOptions& options) {
  XYProfile profile;
  profile.m = m;
  profile.x = x_of(m);
  profile.y = harmonic(m);

  std::set<Integer> primes;
  for (const Rational* r : {&profile.x, &profile.y}) {
    const Integer num = abs(r->numerator());
    if (num < 2) continue;
    for (const auto& [p, mult] : factorize(num, options)) primes.insert(p);
  }
  const Integer M = to_integer(m);
  for (const Integer& ell : primes) {
    if (ell > M && mpz_fdiv_ui(Integer(M * ell).get_mpz_t(), 4) == 1) {
      profile.exceptional.push_back(ell);
    }
  }
  return profile;
}

std::uint64_t rational_mod(const Rational& r, std::uint64_t ell) {
  const std::uint64_t den = mpz_fdiv_ui(r.denominator().get_mpz_t(), ell);
  if (den == 0) throw std::domain_error("denominator not invertible");
  const std::uint64_t num = mpz_fdiv_ui(r.numerator().get_mpz_t(), ell);
  return mod::mul(num, mod::inv(den, ell), ell);
}

std::uint64_t predicted_prime_power_residue(std::uint64_t p, unsigned e) {
  require_field_prime(p);
  if (e == 0) throw std::invalid_argument("predicted_prime_power_residue: e must be >= 1");
  std::uint64_t n = 1;
  for (unsigned i = 0; i < e; ++i) n *= p;
  return mod::pow(lcm_quotient_mod(n, n, p), n - 1, p);
}

std::uint64_t predicted_split_residue(std::uint64_t m, std::uint64_t q) {
  if (m < 2 || q <= m || !is_prime_u64(q) || std::gcd(m, q) != 1) {
    throw std::invalid_argument("theorem hypotheses violated");
  }
  require_field_prime(q);
  const std::uint64_t n = m * q;
  const std::uint64_t frame = mod::pow(lcm_quotient_mod(n, q, q), n - 1, q);
  const std::uint64_t x = mod::pow(rational_mod(x_of(m), q), q, q);
  const std::uint64_t y = mod::pow(rational_mod(harmonic(m), q), q - 1, q);
  return mod::mul(mod::mul(frame, x, q), y, q);
}

std::uint64_t predicted_bertrand_residue(std::uint64_t n, std::uint64_t ell) {
  require_field_prime(ell);
  const std::uint64_t v = mod::pow(lcm_quotient_mod(n, ell, ell), n - 1, ell);
  return mod::sub(0, v, ell);
}

}  // namespace logdisc
