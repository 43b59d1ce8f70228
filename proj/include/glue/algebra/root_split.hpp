#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "glue/algebra/fp_poly.hpp"
#include "glue/algebra/int_poly.hpp"

namespace glue {

struct RootSplit {
    std::vector<std::pair<std::uint64_t, unsigned>> roots;  // (root, multiplicity), ascending
    fp::Poly cofactor;                                       // monic, no roots in F_l
    unsigned multiplicity(std::uint64_t r) const;
    unsigned root_count() const;  // with multiplicity
};

// roots of F mod l by exhaustive evaluation; F must stay nonzero mod l
RootSplit split_roots_mod(const IntPoly& F, std::uint64_t ell);

// same, for the quartics this project deals with (degree 4, odd l)
RootSplit factor_quartic_mod_ell(const IntPoly& F, std::uint64_t ell);

}  // namespace glue
