#pragma once

#include <cstdint>
#include <vector>

#include "glue/algebra/ext_field.hpp"
#include "glue/algebra/int_poly.hpp"
#include "glue/models/curves.hpp"

namespace glue {

// (a, a') of F(T) = T^4 - a T^3 + a' T^2 - p a T + p^2
struct FrobeniusData {
    std::uint64_t p = 0;
    std::int64_t a = 0;
    std::int64_t a_prime = 0;

    IntPoly poly() const;
    // every complex root has absolute value sqrt(p)
    bool satisfies_weil() const;
    bool operator==(const FrobeniusData&) const = default;
};

// points on the smooth model over the given field, infinity included
Integer count_points_g2(const GenusTwoCurve& Y, const ExtensionField& K);
// same over F_p, table-driven for odd p
std::uint64_t count_points_g2_prime(const GenusTwoCurve& Y, std::uint64_t p);

FrobeniusData frobenius_polynomial(const GenusTwoCurve& Y, std::uint64_t p);
// just a_{p,Y} = p + 1 - #Y(F_p); the cheap path for long prime ranges
std::int64_t trace_g2(const GenusTwoCurve& Y, std::uint64_t p);

// quadratic character table on F_p: chi[x] in {-1, 0, 1}
std::vector<std::int8_t> legendre_table(std::uint64_t p);

// #E(F_p) for the reduction of the given model (singular points counted once)
std::uint64_t count_points_elliptic(const EllipticCurve& X, std::uint64_t p);
Reduction reduction_type(const EllipticCurve& X, std::uint64_t p);
// trace of Frobenius at good p, else 1 / -1 / 0 by reduction type
std::int64_t ap_elliptic(const EllipticCurve& X, std::uint64_t p);

}  // namespace glue
