#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glue/jacobian/torsion.hpp"
#include "glue/models/curves.hpp"

namespace glue {

enum class SymplecticType { positive, negative, fail };
const char* to_string(SymplecticType t);

// A prime p at which Frob_p acts on X[l] by a non-diagonalizable matrix with
// double eigenvalue gamma, and F_{Y,p} = (T - alpha)(T - beta)(T - gamma)^2 mod l
// with alpha, beta != gamma.
struct WitnessPrime {
    std::uint64_t p = 0;
    std::int64_t a_X = 0;
    std::uint64_t alpha = 0, beta = 0, gamma = 0;  // alpha <= beta
    unsigned degree = 0;  // working field F_{p^degree}: holds X[l] and Jac(Y)[l]
};

struct SymplecticVerdict {
    SymplecticType type = SymplecticType::fail;
    std::uint64_t ell = 0;
    std::optional<WitnessPrime> witness;
    // w1 = zeta^s1, w2 = zeta^s2 for the fixed root of unity of the working field
    std::uint64_t w1 = 0, w2 = 0;
    unsigned attempts_X = 0, attempts_Y = 0;
};

// nullopt when p is not usable (bad for either curve, p = 2 or l, a^2 != 4p,
// diagonalizable, or the genus-2 eigenvalue pattern is degenerate)
std::optional<WitnessPrime> check_witness(const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell,
                                          std::uint64_t p);
std::optional<WitnessPrime> find_witness_prime(const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell,
                                               std::uint64_t search_bound = 500);

// throws invalid_argument if p is not a witness; internal_error if resampling
// needs more than 64 l attempts
SymplecticVerdict symplectic_type(const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell,
                                  const WitnessPrime& w, std::uint64_t seed);
SymplecticVerdict symplectic_type(const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell, std::uint64_t p,
                                  std::uint64_t seed);
// search + verdict; type fail when no witness <= search_bound
SymplecticVerdict symplectic_verdict(const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell,
                                     std::uint64_t seed, std::uint64_t search_bound = 500);

// both pairing values from X itself: always positive
SymplecticVerdict self_symplectic_type(const EllipticCurve& X, std::uint64_t ell, std::uint64_t p, std::uint64_t seed);

// (type = positive) xor (l = 3 mod 4); nullopt for fail
std::optional<bool> antisymplectic_exists(SymplecticType t, std::uint64_t ell);
inline std::optional<bool> antisymplectic_exists(const SymplecticVerdict& v) { return antisymplectic_exists(v.type, v.ell); }

// (Frob - alpha)(Frob - beta) R
MumfordDivisor cofactor_image(const HyperellipticJacobian& J, const MumfordDivisor& R, std::uint64_t alpha,
                              std::uint64_t beta, std::uint64_t ell);

// --- F_l helpers, exposed for the matrix-level checks
bool is_square_mod(std::uint64_t a, std::uint64_t ell);  // nonzero square
std::uint64_t alternating_form(const std::vector<std::uint64_t>& v, const std::vector<std::uint64_t>& w,
                               std::uint64_t ell);  // v0 w1 - v1 w0
bool is_diagonalizable(const Matrix& M, std::uint64_t ell);  // 2x2, over F_l

}  // namespace glue
