#pragma once

#include <span>

#include "logdisc/integer.hpp"

namespace logdisc {

struct Congruence {
  Integer residue;
  Integer modulus;
};

// Combines pairwise coprime congruences into one modulo their product. The
// result residue lies in [0, modulus). Throws std::invalid_argument on
// non-coprime or non-positive moduli.
Congruence crt_combine(std::span<const Congruence> parts);

// Representative of c.residue in (-M/2, M/2].
Integer symmetric_residue(const Congruence& c);

}  // namespace logdisc
