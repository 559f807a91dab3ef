#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace logdisc {

// Reasons disc(F_n) is not a rational square, each re-checkable from n alone.
namespace cert {

// n == 2, 3 (mod 4): the discriminant is negative.
struct NegativeSign {
  friend bool operator==(const NegativeSign&, const NegativeSign&) = default;
};

// v_ell(disc) = v_ell(n) - (n-1) v_ell(L_n) is odd because ell does not divide P_n.
struct OddValuation {
  std::uint64_t ell = 0;
  friend bool operator==(const OddValuation&, const OddValuation&) = default;
};

// n = p^e with e odd and p coprime to P_n.
struct OddPrimePowerValuation {
  std::uint64_t p = 0;
  unsigned e = 0;
  friend bool operator==(const OddPrimePowerValuation&, const OddPrimePowerValuation&) = default;
};

// n = m q, q prime, q > m, q divides neither X(m) nor Y(m) numerators.
struct SplitTheorem {
  std::uint64_t m = 0;
  std::uint64_t q = 0;
  friend bool operator==(const SplitTheorem&, const SplitTheorem&) = default;
};

// disc(F_n) mod ell is a quadratic non-residue for a prime ell > n.
struct NonResidueWitness {
  std::uint64_t ell = 0;
  std::uint64_t residue = 0;
  friend bool operator==(const NonResidueWitness&, const NonResidueWitness&) = default;
};

struct ExactNonSquare {
  friend bool operator==(const ExactNonSquare&, const ExactNonSquare&) = default;
};

// n = 1; disc = 1 and the conjecture says nothing.
struct TrivialN1 {
  friend bool operator==(const TrivialN1&, const TrivialN1&) = default;
};

// The exact discriminant is a rational square.
struct Counterexample {
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct Unresolved {
  unsigned witness_attempts = 0;
  friend bool operator==(const Unresolved&, const Unresolved&) = default;
};

}  // namespace cert

using Certificate =
    std::variant<cert::NegativeSign, cert::OddValuation, cert::OddPrimePowerValuation,
                 cert::SplitTheorem, cert::NonResidueWitness, cert::ExactNonSquare,
                 cert::TrivialN1, cert::Counterexample, cert::Unresolved>;

// Variant name, e.g. "NonResidueWitness".
std::string_view certificate_type(const Certificate& c);

// True for every variant that claims disc(F_n) is not a rational square.
bool asserts_non_square(const Certificate& c);

struct ClassifyConfig {
  unsigned max_witness_attempts = 200;
  bool allow_exact_fallback = true;
  std::uint64_t exact_degree_cap = 1000;
};

struct Witness {
  std::uint64_t ell = 0;
  std::uint64_t residue = 0;
  unsigned attempts = 0;
};

// Smallest prime in the open interval (n/2, n-2); n == 0 (mod 4), n >= 8.
std::uint64_t bertrand_prime(std::uint64_t n);

// First prime ell > n (in increasing order) at which disc(F_n) is a
// non-residue, trying at most max_attempts primes. Zero residues are skipped.
std::optional<Witness> witness_search(std::uint64_t n, unsigned max_attempts);

Certificate classify(std::uint64_t n, const ClassifyConfig& config = {});

struct Verification {
  bool valid = false;
  std::string diagnostic;

  explicit operator bool() const { return valid; }
};

// Re-derives the certificate's claim from n using only the core primitives.
Verification verify_certificate(std::uint64_t n, const Certificate& c);

}  // namespace logdisc
