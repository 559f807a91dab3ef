#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace logdisc {

using Integer = mpz_class;

inline Integer to_integer(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline bool fits_u64(const Integer& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

// Caller guarantees fits_u64(x).
inline std::uint64_t to_u64(const Integer& x) {
  std::uint64_t v = 0;
  if (sgn(x) != 0) {
    mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, x.get_mpz_t());
  }
  return v;
}

inline std::string to_string(const Integer& x) { return x.get_str(10); }

}  // namespace logdisc
