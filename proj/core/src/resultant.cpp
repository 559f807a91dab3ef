#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "logdisc/modular.hpp"
#include "logdisc/polynomial.hpp"
#include "logdisc/primes.hpp"

namespace logdisc {

namespace {

void trim(std::vector<std::uint64_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Res(a, b) over F_p for nonzero a, b, p < 2^32. Euclidean remainder sequence
// with Res(A, B) = (-1)^(dA dB) lc(B)^(dA - dR) Res(B, R), R = A mod B.
std::uint64_t field_resultant(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                              std::uint64_t p) {
  std::uint64_t result = 1;
  for (;;) {
    const std::size_t da = a.size() - 1;
    const std::size_t db = b.size() - 1;
    if (db == 0) return mod::mul(result, mod::pow(b[0], da, p), p);
    if (da == 0) return mod::mul(result, mod::pow(a[0], db, p), p);
    if (da < db) {
      if ((da & db & 1) != 0) result = mod::sub(0, result, p);
      std::swap(a, b);
      continue;
    }

    const std::uint64_t lead_inv = mod::inv(b.back(), p);
    for (std::size_t i = da + 1; i-- > db;) {
      const std::uint64_t c = a[i] * lead_inv % p;
      if (c == 0) continue;
      const std::uint64_t neg = p - c;
      std::uint64_t* row = a.data() + (i - db);
      for (std::size_t j = 0; j < db; ++j) row[j] = (row[j] + neg * b[j]) % p;
      a[i] = 0;
    }
    a.resize(db);
    trim(a);
    if (a.empty()) return 0;

    const std::size_t dr = a.size() - 1;
    if ((da & db & 1) != 0) result = mod::sub(0, result, p);
    result = mod::mul(result, mod::pow(b.back(), da - dr, p), p);
    std::swap(a, b);
  }
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over Z.
std::vector<Integer> pseudo_remainder(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  long e = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (Integer& x : a) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
    --e;
  }
  if (e > 0 && !a.empty()) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (Integer& x : a) x *= scale;
  }
  return a;
}

Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void divide_exact(std::vector<Integer>& v, const Integer& d) {
  for (Integer& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

}  // namespace

std::uint64_t resultant_mod_p(const PrimeFieldPoly& f, const PrimeFieldPoly& g) {
  if (f.modulus() != g.modulus()) throw std::invalid_argument("resultant_mod_p: modulus mismatch");
  if (!f.is_monic() || f.degree() < 1) {
    throw std::invalid_argument("resultant_mod_p: f must be monic of degree >= 1");
  }
  if (g.is_zero()) return 0;
  const auto fc = f.coefficients();
  const auto gc = g.coefficients();
  return field_resultant({fc.begin(), fc.end()}, {gc.begin(), gc.end()}, f.modulus());
}

std::uint64_t crt_prime(std::size_t i) {
  static std::mutex guard;
  static std::vector<std::uint64_t> primes;
  std::lock_guard lock(guard);
  while (primes.size() <= i) {
    std::uint64_t c = primes.empty() ? PrimeFieldPoly::kMaxModulus - 1 : primes.back() - 2;
    while (!is_prime_u64(c)) c -= 2;
    primes.push_back(c);
  }
  return primes[i];
}

Integer resultant_exact(const IntPoly& f, const IntPoly& g, const Integer& bound) {
  if (!f.is_monic()) throw std::invalid_argument("resultant_exact: f must be monic");
  if (f.degree() == 0) return 1;
  if (g.is_zero()) return 0;

  const Integer target = 2 * abs(bound);
  Integer value = 0;
  Integer modulus = 1;
  // At least three primes even for tiny bounds, so a zero resultant is never
  // inferred from a single unlucky modulus.
  for (std::size_t i = 0; i < 3 || modulus <= target; ++i) {
    const std::uint64_t p = crt_prime(i);
    const std::uint64_t r = resultant_mod_p(f.reduce(p), g.reduce(p));
    const std::uint64_t current = mpz_fdiv_ui(value.get_mpz_t(), p);
    const std::uint64_t m_inv = mod::inv(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    const std::uint64_t t = mod::mul(mod::sub(r, current, p), m_inv, p);
    mpz_addmul_ui(value.get_mpz_t(), modulus.get_mpz_t(), t);
    mpz_mul_ui(modulus.get_mpz_t(), modulus.get_mpz_t(), p);
  }
  if (2 * value > modulus) value -= modulus;
  return value;
}

Integer resultant_prs(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const auto fc = f.coefficients();
  const auto gc = g.coefficients();
  std::vector<Integer> a(fc.begin(), fc.end());
  std::vector<Integer> b(gc.begin(), gc.end());

  const Integer ca = f.content();
  const Integer cb = g.content();
  divide_exact(a, ca);
  divide_exact(b, cb);

  auto deg = [](const std::vector<Integer>& v) { return static_cast<unsigned long>(v.size() - 1); };
  const Integer t = power(ca, deg(b)) * power(cb, deg(a));
  int s = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if ((deg(a) & deg(b) & 1) != 0) s = -1;
  }

  Integer lead = 1;
  Integer h = 1;
  while (deg(b) > 0) {
    const unsigned long delta = deg(a) - deg(b);
    if ((deg(a) & deg(b) & 1) != 0) s = -s;
    std::vector<Integer> r = pseudo_remainder(a, b);
    if (r.empty()) return 0;
    a = std::move(b);
    b = std::move(r);
    divide_exact(b, lead * power(h, delta));
    lead = a.back();
    if (delta > 0) {
      Integer next = power(lead, delta);
      mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), power(h, delta - 1).get_mpz_t());
      h = std::move(next);
    }
  }

  // b is a nonzero constant here.
  const unsigned long da = deg(a);
  if (da == 0) return s * t * h;
  Integer last = power(b.back(), da);
  mpz_divexact(last.get_mpz_t(), last.get_mpz_t(), power(h, da - 1).get_mpz_t());
  return s * t * last;
}

}  // namespace logdisc
