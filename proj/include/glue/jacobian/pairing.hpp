#pragma once

#include <cstdint>
#include <random>

#include "glue/jacobian/jacobian.hpp"

namespace glue {

// fixed primitive l-th root of unity of K: z^{(q-1)/l} for the first z = t + c
// (c = 1, 2, ...) that does not give 1. Needs l | q - 1.
Fq root_of_unity(const ExtensionField& K, std::uint64_t ell);
// s in [0, l) with zeta^s = w
std::uint64_t mu_log(const ExtensionField& K, const Fq& zeta, const Fq& w, std::uint64_t ell);

// e_l(A, B) = f_A(B') / f_B(A') with A' = [A + R1] - R1, B' = [B + R2] - R2 for
// random R1, R2, f_X the normalized-away Miller function of l X. Retries on
// support collisions, at most 32 times.
Fq weil_pairing(const HyperellipticJacobian& J, const MumfordDivisor& A, const MumfordDivisor& B, std::uint64_t ell,
                std::mt19937_64& rng);

}  // namespace glue
