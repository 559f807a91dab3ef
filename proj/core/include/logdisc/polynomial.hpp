#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "logdisc/integer.hpp"

namespace logdisc {

class PrimeFieldPoly;

// Dense polynomial over Z, coefficients in ascending degree. The zero
// polynomial has no coefficients; otherwise the last coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<Integer> coeffs);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const Integer& leading() const { return coeffs_.back(); }
  std::span<const Integer> coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t k) const;

  IntPoly derivative() const;
  // gcd of the coefficients (nonnegative); 0 for the zero polynomial.
  Integer content() const;
  Integer eval(const Integer& x) const;
  PrimeFieldPoly reduce(std::uint64_t modulus) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Dense polynomial over F_p for a prime p < 2^32 (products of two residues
// fit in 64 bits). Coefficients are reduced and the representation trimmed.
class PrimeFieldPoly {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

  PrimeFieldPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);

  std::uint64_t modulus() const { return modulus_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  std::uint64_t leading() const { return coeffs_.back(); }
  std::span<const std::uint64_t> coefficients() const { return coeffs_; }

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> coeffs_;
};

// 1 + x + ... + x^(n-1); its roots are the nontrivial n-th roots of unity.
IntPoly psi_poly(std::uint64_t n);

// Res(f, g) mod p for monic f of degree >= 1: the product of g over the roots
// of f. Throws std::invalid_argument on a non-monic f or mismatched moduli.
std::uint64_t resultant_mod_p(const PrimeFieldPoly& f, const PrimeFieldPoly& g);

// Exact Res(f, g) for monic f, reconstructed by CRT from word-size primes
// until their product exceeds 2 * bound. The caller guarantees
// |Res(f, g)| <= bound.
Integer resultant_exact(const IntPoly& f, const IntPoly& g, const Integer& bound);

// Sylvester resultant via the subresultant PRS over Z. Independent of the
// modular path; intended as a reference.
Integer resultant_prs(const IntPoly& f, const IntPoly& g);

// (sum |g_k|)^d: bounds |prod g(theta_i)| over d roots on the unit circle.
Integer product_bound(const IntPoly& g, std::uint64_t d);

// i-th prime of the fixed descending sequence below 2^32 used for CRT.
std::uint64_t crt_prime(std::size_t i);

}  // namespace logdisc
