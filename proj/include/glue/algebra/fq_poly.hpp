#pragma once

#include <random>
#include <vector>

#include "glue/algebra/ext_field.hpp"

// dense polynomials over an ExtensionField, ascending, trimmed
namespace glue::fq {

using Poly = std::vector<Fq>;

void trim(const ExtensionField& K, Poly& a);
int degree(const Poly& a);
Poly constant(const ExtensionField& K, const Fq& c);
Poly x_minus(const ExtensionField& K, const Fq& r);  // x - r
Poly add(const ExtensionField& K, const Poly& a, const Poly& b);
Poly sub(const ExtensionField& K, const Poly& a, const Poly& b);
Poly neg(const ExtensionField& K, const Poly& a);
Poly mul(const ExtensionField& K, const Poly& a, const Poly& b);
Poly scale(const ExtensionField& K, const Poly& a, const Fq& s);
void divmod(const ExtensionField& K, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly rem(const ExtensionField& K, const Poly& a, const Poly& b);
Poly div_exact(const ExtensionField& K, const Poly& a, const Poly& b);  // throws on remainder
Poly monic(const ExtensionField& K, const Poly& a);
Poly gcd(const ExtensionField& K, Poly a, Poly b);  // monic
// d = s a + t b, d monic
void xgcd(const ExtensionField& K, const Poly& a, const Poly& b, Poly& d, Poly& s, Poly& t);
Fq eval(const ExtensionField& K, const Poly& a, const Fq& x);
Poly frobenius(const ExtensionField& K, const Poly& a);  // coefficientwise p-power
Poly powmod(const ExtensionField& K, const Poly& base, const Integer& e, const Poly& m);
Fq resultant(const ExtensionField& K, Poly a, Poly b);
bool equal(const Poly& a, const Poly& b);

// distinct roots lying in K, ascending by coefficient vector; odd characteristic
std::vector<Fq> roots(const ExtensionField& K, const Poly& f, std::mt19937_64& rng);

}  // namespace glue::fq
