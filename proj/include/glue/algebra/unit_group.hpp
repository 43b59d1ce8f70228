#pragma once

#include <cstdint>
#include <vector>

#include "glue/algebra/integer.hpp"

namespace glue {

// (Z/mZ)^* as a product of cyclic groups, one or two per prime-power factor of m
struct UnitGroup {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> generators;  // residues mod `modulus`
    std::vector<std::uint64_t> orders;

    // exponents x with a = prod g_i^{x_i}; a must be a unit
    std::vector<std::uint64_t> dlog(std::uint64_t a) const;
    std::uint64_t element(const std::vector<std::uint64_t>& exps) const;
    std::uint64_t size() const;

    // per-component data for dlog: prime power and the local generators
    struct Local {
        std::uint64_t pe;
        std::vector<std::size_t> idx;  // which generators live here
        std::vector<std::uint64_t> local_gens;
    };
    std::vector<Local> locals;
};

UnitGroup unit_group(std::uint64_t m);

}  // namespace glue
