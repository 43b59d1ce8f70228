#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glue/algebra/unit_group.hpp"

namespace glue {

// least primitive root mod a prime
std::uint64_t primitive_root(std::uint64_t ell);

// chi : (Z/DZ)^* -> F_l^*. Generator g_i (order n_i) goes to
// w^{(l-1)/d_i * e_i}, d_i = gcd(n_i, l-1), w the least primitive root mod l.
class DirichletCharacter {
public:
    DirichletCharacter() = default;
    DirichletCharacter(std::uint64_t modulus, std::uint64_t ell, std::vector<std::uint64_t> exponents);

    static DirichletCharacter trivial(std::uint64_t modulus, std::uint64_t ell);

    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t ell() const { return ell_; }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }
    // d_i per generator
    const std::vector<std::uint64_t>& admissible_orders() const { return admissible_; }
    const UnitGroup& group() const { return group_; }

    // chi(a) in [1, l); a must be prime to the modulus
    std::uint64_t operator()(std::uint64_t a) const;
    bool is_trivial() const;
    // multiplicative order of the image
    std::uint64_t order() const;
    std::string str() const;

    bool operator==(const DirichletCharacter& o) const {
        return modulus_ == o.modulus_ && ell_ == o.ell_ && exponents_ == o.exponents_;
    }

private:
    std::uint64_t modulus_ = 1, ell_ = 0;
    std::vector<std::uint64_t> exponents_, admissible_;
    UnitGroup group_;
    std::vector<std::uint64_t> table_;  // value per residue, 0 on non-units
};

// every character mod D into F_l^*, ordered by exponent vector
std::vector<DirichletCharacter> all_characters(std::uint64_t D, std::uint64_t ell);

}  // namespace glue
