#include "logdisc/rational.hpp"

#include <stdexcept>

namespace logdisc {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_.get_num() = num;
  value_.get_den() = den;
  value_.canonicalize();
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().get_str(10);
  return numerator().get_str(10) + "/" + denominator().get_str(10);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (num.set_str(text.substr(0, slash), 10) != 0) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  if (slash != std::string::npos && den.set_str(text.substr(slash + 1), 10) != 0) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.value_ = -r.value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(unsigned long e) const {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), e);
  return Rational(num, den);
}

}  // namespace logdisc
