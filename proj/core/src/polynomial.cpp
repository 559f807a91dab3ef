#include "logdisc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace logdisc {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const Integer& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PrimeFieldPoly IntPoly::reduce(std::uint64_t modulus) const {
  std::vector<std::uint64_t> r(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    r[k] = mpz_fdiv_ui(coeffs_[k].get_mpz_t(), modulus);
  }
  return PrimeFieldPoly(modulus, std::move(r));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coefficient(k) + b.coefficient(k);
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coefficient(k) - b.coefficient(k);
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> r(a.coeffs_);
  for (Integer& x : r) x *= c;
  return IntPoly(std::move(r));
}

PrimeFieldPoly::PrimeFieldPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (modulus_ < 2 || modulus_ >= kMaxModulus) {
    throw std::invalid_argument("PrimeFieldPoly: modulus out of range");
  }
  for (std::uint64_t& c : coeffs_) c %= modulus_;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly psi_poly(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("psi_poly: n must be >= 2");
  return IntPoly(std::vector<Integer>(n, Integer(1)));
}

Integer product_bound(const IntPoly& g, std::uint64_t d) {
  Integer sum = 0;
  for (const Integer& c : g.coefficients()) sum += abs(c);
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), sum.get_mpz_t(), d);
  return bound;
}

}  // namespace logdisc
