#pragma once

#include <cstdint>
#include <vector>

#include "glue/algebra/prime_field.hpp"

// dense polynomials over F_p as ascending residue vectors, trailing zeros trimmed
namespace glue::fp {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
int degree(const Poly& a);
Poly add(const PrimeField& F, const Poly& a, const Poly& b);
Poly sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly mul(const PrimeField& F, const Poly& a, const Poly& b);
Poly scale(const PrimeField& F, const Poly& a, std::uint64_t s);
// quotient and remainder; b nonzero
void divmod(const PrimeField& F, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly rem(const PrimeField& F, const Poly& a, const Poly& b);
Poly gcd(const PrimeField& F, Poly a, Poly b);  // monic
Poly monic(const PrimeField& F, const Poly& a);
Poly powmod(const PrimeField& F, Poly base, const Integer& e, const Poly& m);
std::uint64_t eval(const PrimeField& F, const Poly& a, std::uint64_t x);

// Ben-Or: no irreducible factor of degree <= k/2
bool is_irreducible(const PrimeField& F, const Poly& m);

}  // namespace glue::fp
