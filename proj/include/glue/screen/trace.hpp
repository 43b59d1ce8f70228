#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "glue/models/curves.hpp"
#include "glue/screen/character.hpp"

namespace glue {

// p -> b_p, the trace of Frob_p on H^perp/H, for H described by chi
struct TraceFunction {
    GenusTwoCurve Y;
    std::uint64_t ell = 0;
    DirichletCharacter chi;

    TraceFunction() = default;
    TraceFunction(GenusTwoCurve Y, std::uint64_t ell, DirichletCharacter chi);

    // p not dividing l N_Y D
    bool defined_at(std::uint64_t p) const;
};

// b_p = a_{p,Y} - chi(p) - p/chi(p) mod l
std::uint64_t trace_b(const TraceFunction& t, std::uint64_t p);
// same with a_{p,Y} supplied (the long Sturm scan precomputes it)
std::uint64_t trace_b_from(const TraceFunction& t, std::uint64_t p, std::int64_t a_pY);

// no Hasse-Weil integer and neither multiplicative value reaches b_p mod l
bool nonexistence_certificate(const TraceFunction& t, std::uint64_t p);

// first prime in `primes` carrying a certificate (unusable primes skipped)
std::optional<std::uint64_t> find_certificate(const TraceFunction& t, const std::vector<std::uint64_t>& primes);

}  // namespace glue
