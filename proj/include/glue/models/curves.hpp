#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "glue/algebra/int_poly.hpp"
#include "glue/algebra/integer.hpp"

namespace glue {

// y^2 + h(x) y = f(x), deg f <= 6, deg h <= 3
struct GenusTwoCurve {
    std::string label;
    IntPoly f, h;
    Integer conductor;
    Factorization conductor_factors;

    GenusTwoCurve() = default;
    GenusTwoCurve(std::string label, IntPoly f, IntPoly h, const Integer& conductor);

    // h^2 + 4f
    IntPoly completed() const;
    // 2^-12 disc_6(h^2 + 4f), the usual genus-2 discriminant of the model
    Integer discriminant() const;
    bool is_good(std::uint64_t p) const;  // p does not divide N_Y
    unsigned conductor_valuation(std::uint64_t p) const;
};

enum class Reduction { good, split_mult, nonsplit_mult, additive };
const char* to_string(Reduction r);

struct EllipticCurve {
    std::string label;
    std::array<Integer, 5> a;  // a1 a2 a3 a4 a6
    Integer conductor;
    Factorization conductor_factors;
    std::optional<Integer> disc_min;

    EllipticCurve() = default;
    EllipticCurve(std::string label, std::array<Integer, 5> a, const Integer& conductor,
                  std::optional<Integer> disc_min = std::nullopt);

    Integer b2() const;
    Integer b4() const;
    Integer b6() const;
    Integer b8() const;
    Integer c4() const;
    Integer c6() const;
    Integer discriminant() const;
    unsigned conductor_valuation(std::uint64_t p) const;
};

}  // namespace glue
