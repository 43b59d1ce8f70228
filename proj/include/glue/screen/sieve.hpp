#pragma once

#include <cstdint>
#include <vector>

#include "glue/algebra/integer.hpp"
#include "glue/models/curves.hpp"
#include "glue/screen/character.hpp"

namespace glue {

// primes <= bound where Y is good (p does not divide N_Y) and the given model
// is smooth mod p
std::vector<std::uint64_t> default_primes(const GenusTwoCurve& Y, std::uint64_t bound = 100);

struct SieveResult {
    Integer d;                           // largest d with d^2 | N_Y
    Integer resultant_gcd;               // gcd_p Res(F_{Y,p}, T^{f_p} - 1)
    std::vector<std::uint64_t> l_good;   // primes dividing it
    std::vector<std::uint64_t> l_bad;    // l | N_Y surviving the root test
    std::vector<std::uint64_t> primes;   // union, ascending
};

SieveResult prime_sieve(const GenusTwoCurve& Y, const std::vector<std::uint64_t>& P);
std::vector<std::uint64_t> possible_primes(const GenusTwoCurve& Y, const std::vector<std::uint64_t>& P);

// D = l d if l | N_Y else d, d^2 the largest square dividing N_Y / l^{v_l(N_Y)}
std::uint64_t character_modulus(const GenusTwoCurve& Y, std::uint64_t ell);

// characters mod D whose value at every usable q in Q is a root of F_{Y,q} mod l
std::vector<DirichletCharacter> character_candidates(const GenusTwoCurve& Y, std::uint64_t ell,
                                                     const std::vector<std::uint64_t>& Q);

}  // namespace glue
