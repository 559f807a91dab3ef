#include "logdisc/certificate.hpp"

#include <numeric>
#include <stdexcept>

#include "logdisc/arith.hpp"
#include "logdisc/discriminant.hpp"
#include "logdisc/factor.hpp"
#include "logdisc/primes.hpp"

namespace logdisc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Verification ok() { return {true, {}}; }
Verification fail(std::string why) { return {false, std::move(why)}; }

bool fits_field(std::uint64_t ell) { return ell >= 2 && ell < PrimeFieldPoly::kMaxModulus; }

// q must divide neither numerator for the split congruence to be a unit.
bool outside_exceptional_set(std::uint64_t m, std::uint64_t q) {
  const Rational x = x_of(m);
  const Rational y = harmonic(m);
  return !mpz_divisible_ui_p(x.numerator().get_mpz_t(), q) &&
         !mpz_divisible_ui_p(y.numerator().get_mpz_t(), q);
}

struct Split {
  std::uint64_t m = 0;
  std::uint64_t q = 0;
};

// n = m q with q the largest prime factor, v_q(n) = 1 and q > m.
std::optional<Split> split_candidate(std::uint64_t n, const FactorMap& factors) {
  const auto& [largest, mult] = *factors.rbegin();
  if (mult != 1 || factors.size() < 2) return std::nullopt;
  const std::uint64_t q = to_u64(largest);
  const std::uint64_t m = n / q;
  if (q <= m) return std::nullopt;
  return Split{m, q};
}

}  // namespace

std::string_view certificate_type(const Certificate& c) {
  return std::visit(overloaded{
                        [](const cert::NegativeSign&) { return "NegativeSign"; },
                        [](const cert::OddValuation&) { return "OddValuation"; },
                        [](const cert::OddPrimePowerValuation&) { return "OddPrimePowerValuation"; },
                        [](const cert::SplitTheorem&) { return "SplitTheorem"; },
                        [](const cert::NonResidueWitness&) { return "NonResidueWitness"; },
                        [](const cert::ExactNonSquare&) { return "ExactNonSquare"; },
                        [](const cert::TrivialN1&) { return "TrivialN1"; },
                        [](const cert::Counterexample&) { return "Counterexample"; },
                        [](const cert::Unresolved&) { return "Unresolved"; },
                    },
                    c);
}

bool asserts_non_square(const Certificate& c) {
  return !std::holds_alternative<cert::TrivialN1>(c) &&
         !std::holds_alternative<cert::Counterexample>(c) &&
         !std::holds_alternative<cert::Unresolved>(c);
}

std::uint64_t bertrand_prime(std::uint64_t n) {
  if (n < 8 || n % 4 != 0) throw std::invalid_argument("bertrand_prime: need n >= 8, n == 0 (mod 4)");
  for (std::uint64_t ell = n / 2 + 1; ell < n - 2; ++ell) {
    if (is_prime_u64(ell)) return ell;
  }
  throw std::logic_error("no prime in (n/2, n-2) for n = " + std::to_string(n));
}

std::optional<Witness> witness_search(std::uint64_t n, unsigned max_attempts) {
  if (n < 2) throw std::invalid_argument("witness_search: n must be >= 2");
  std::uint64_t ell = n;
  for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
    ell = next_prime_u64(ell);
    if (ell >= PrimeFieldPoly::kMaxModulus) break;
    const std::uint64_t r = disc_mod(n, ell);
    if (r != 0 && legendre_symbol(to_integer(r), to_integer(ell)) == -1) {
      return Witness{ell, r, attempt};
    }
  }
  return std::nullopt;
}

Certificate classify(std::uint64_t n, const ClassifyConfig& config) {
  if (n == 0) throw std::invalid_argument("classify: n must be >= 1");
  if (n == 1) return cert::TrivialN1{};
  if (n % 4 == 2 || n % 4 == 3) return cert::NegativeSign{};

  if (n % 4 == 0) {
    if (n == 4) return cert::ExactNonSquare{};
    const std::uint64_t ell = bertrand_prime(n);
    if (p_n_mod(n, ell) != 0) return cert::OddValuation{ell};
  } else {
    const FactorMap factors = factorize(to_integer(n));
    if (factors.size() == 1) {
      const auto& [p, e] = *factors.begin();
      const std::uint64_t prime = to_u64(p);
      if (e % 2 == 1 && fits_field(prime) && p_n_mod(n, prime) != 0) {
        return cert::OddPrimePowerValuation{prime, e};
      }
    } else if (const auto split = split_candidate(n, factors)) {
      if (fits_field(split->q) && outside_exceptional_set(split->m, split->q) &&
          p_n_mod(n, split->q) != 0) {
        return cert::SplitTheorem{split->m, split->q};
      }
    }
  }

  if (const auto w = witness_search(n, config.max_witness_attempts)) {
    return cert::NonResidueWitness{w->ell, w->residue};
  }
  if (config.allow_exact_fallback && n <= config.exact_degree_cap) {
    if (is_rational_square(*disc_exact(n).exact)) return cert::Counterexample{};
    return cert::ExactNonSquare{};
  }
  return cert::Unresolved{config.max_witness_attempts};
}

Verification verify_certificate(std::uint64_t n, const Certificate& c) {
  if (n == 0) return fail("n must be >= 1");
  try {
    return std::visit(
        overloaded{
            [&](const cert::NegativeSign&) {
              return (n % 4 == 2 || n % 4 == 3) ? ok() : fail("n is not 2 or 3 mod 4");
            },
            [&](const cert::OddValuation& v) {
              if (n < 2) return fail("n must be >= 2");
              if (!fits_field(v.ell) || !is_prime_u64(v.ell)) return fail("ell is not a usable prime");
              const Integer ell = to_integer(v.ell);
              const long frame = static_cast<long>(int_valuation(to_integer(n), ell)) -
                                 static_cast<long>(n - 1) * static_cast<long>(floor_log(n, v.ell));
              if (frame % 2 == 0) return fail("frame valuation is even");
              if (p_n_mod(n, v.ell) == 0) return fail("ell divides P_n");
              return ok();
            },
            [&](const cert::OddPrimePowerValuation& v) {
              if (!fits_field(v.p) || !is_prime_u64(v.p)) return fail("p is not a usable prime");
              if (v.e % 2 == 0) return fail("exponent is even");
              Integer power;
              mpz_ui_pow_ui(power.get_mpz_t(), v.p, v.e);
              if (power != to_integer(n)) return fail("n != p^e");
              // v_p(disc) = e - (n-1) e + v_p(P_n) = e (2 - n) when p does not divide P_n.
              if (n % 2 == 0) return fail("e(2-n) is even");
              if (p_n_mod(n, v.p) == 0) return fail("p divides P_n");
              return ok();
            },
            [&](const cert::SplitTheorem& s) {
              if (s.m < 2 || s.q == 0 || n / s.q != s.m || n % s.q != 0) return fail("n != m q");
              if (!fits_field(s.q) || !is_prime_u64(s.q)) return fail("q is not a usable prime");
              if (s.q <= s.m) return fail("q <= m");
              if (std::gcd(s.m, s.q) != 1) return fail("gcd(m, q) != 1");
              if (n % 4 != 1) return fail("m q is not 1 mod 4");
              if (!outside_exceptional_set(s.m, s.q)) return fail("q lies in E_m");
              if (p_n_mod(n, s.q) == 0) return fail("q divides P_n");
              return ok();
            },
            [&](const cert::NonResidueWitness& w) {
              if (n < 2) return fail("n must be >= 2");
              if (!fits_field(w.ell) || !is_prime_u64(w.ell) || w.ell <= n) {
                return fail("ell is not a prime above n");
              }
              const std::uint64_t r = disc_mod(n, w.ell);
              if (r != w.residue) {
                return fail("residue mismatch: disc = " + std::to_string(r) + " mod " +
                            std::to_string(w.ell));
              }
              if (legendre_symbol(to_integer(r), to_integer(w.ell)) != -1) return fail("residue is a square");
              return ok();
            },
            [&](const cert::ExactNonSquare&) {
              return is_rational_square(*disc_exact(n).exact) ? fail("discriminant is a square") : ok();
            },
            [&](const cert::TrivialN1&) { return n == 1 ? ok() : fail("n != 1"); },
            [&](const cert::Counterexample&) {
              return is_rational_square(*disc_exact(n).exact) ? ok() : fail("discriminant is not a square");
            },
            [&](const cert::Unresolved&) { return fail("unresolved"); },
        },
        c);
  } catch (const std::exception& e) {
    return fail(std::string("verification error: ") + e.what());
  }
}

}  // namespace logdisc
