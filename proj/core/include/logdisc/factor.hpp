#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "logdisc/integer.hpp"

namespace logdisc {

// prime -> multiplicity
using FactorMap = std::map<Integer, unsigned>;

struct FactorOptions {
  std::uint64_t trial_bound = 1u << 16;
  std::uint64_t rho_iterations = 10'000'000;  // per composite cofactor
};

class FactorizationBudgetExhausted : public std::runtime_error {
 public:
  explicit FactorizationBudgetExhausted(Integer cofactor);
  const Integer& cofactor() const { return cofactor_; }

 private:
  Integer cofactor_;
};

// Trial division, then Brent's variant of Pollard rho on the remaining
// composites. Requires x >= 2.
FactorMap factorize(const Integer& x, const FactorOptions& options = {});

Integer multiply_out(const FactorMap& factors);

}  // namespace logdisc
