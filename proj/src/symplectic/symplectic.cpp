#include "glue/symplectic/symplectic.hpp"

#include <numeric>
#include <random>

#include "glue/errors.hpp"
#include "glue/jacobian/pairing.hpp"
#include "glue/models/point_count.hpp"

namespace glue {

const char* to_string(SymplecticType t) {
    switch (t) {
        case SymplecticType::positive: return "positive";
        case SymplecticType::negative: return "negative";
        case SymplecticType::fail: return "fail";
    }
    return "?";
}

bool is_square_mod(std::uint64_t a, std::uint64_t ell) {
    a %= ell;
    return a != 0 && PrimeField(ell).legendre(a) == 1;
}

std::uint64_t alternating_form(const std::vector<std::uint64_t>& v, const std::vector<std::uint64_t>& w,
                               std::uint64_t ell) {
    return (mulmod(v[0], w[1], ell) + ell - mulmod(v[1], w[0], ell)) % ell;
}

bool is_diagonalizable(const Matrix& M, std::uint64_t ell) {
    PrimeField F(ell);
    std::uint64_t tr = F.add(M[0][0], M[1][1]);
    std::uint64_t det = F.sub(F.mul(M[0][0], M[1][1]), F.mul(M[0][1], M[1][0]));
    std::uint64_t disc = F.sub(F.mul(tr, tr), F.mul(4 % ell, det));
    if (disc == 0) return M[0][1] == 0 && M[1][0] == 0 && M[0][0] == M[1][1];  // scalar or a Jordan block
    return F.legendre(disc) == 1;
}

namespace {

std::uint64_t mult_order(std::uint64_t a, std::uint64_t ell) {
    std::uint64_t k = 1, x = a % ell;
    while (x != 1) x = mulmod(x, a, ell), ++k;
    return k;
}

// Frob acts on X[l] by a non-scalar matrix with char poly (T - gamma)^2?
// Scalar iff X[l] is rational over F_{p^m}, m = ord(gamma); when l^2 does not
// divide #X(F_{p^m}) that is already impossible.
bool non_diagonalizable(const EllipticCurve& X, std::uint64_t p, std::int64_t a, std::uint64_t gamma,
                        std::uint64_t ell) {
    auto cp = elliptic_charpoly(a, p);
    unsigned m = static_cast<unsigned>(mult_order(gamma, ell));
    if (jac_order(cp, m) % (ell * ell) != 0) return true;
    unsigned n = static_cast<unsigned>(torsion_field_degree(cp, ell));
    auto K = std::make_shared<ExtensionField>(PrimeField(p), n);
    auto E = jacobian_of(X, K);
    std::mt19937_64 rng(p * 1000003 + ell);
    auto B = torsion_basis(E, jac_order(cp, n), ell, rng);
    auto M = frobenius_matrix(E, B);
    return (ell - 1) % matrix_order(M, ell) != 0;
}

std::vector<std::uint64_t> coeffs_of(const TorsionBasis& B, std::mt19937_64& rng) {
    std::vector<std::uint64_t> c(B.rank());
    for (auto& x : c) x = rng() % B.ell();
    return c;
}

// sample P from the basis until e(P, Frob P) != 1 (P replaced by f(P) first); log of the value
template <class Map>
std::uint64_t frobenius_pairing_log(const HyperellipticJacobian& J, const TorsionBasis& B, const Fq& zeta,
                                    std::uint64_t ell, std::mt19937_64& rng, Map f, unsigned& attempts) {
    const unsigned cap = static_cast<unsigned>(64 * ell);
    for (attempts = 1; attempts <= cap; ++attempts) {
        auto P = f(B.combination(J, coeffs_of(B, rng)));
        if (P.is_identity()) continue;
        auto w = weil_pairing(J, P, J.frobenius(P), ell, rng);
        if (J.field().is_one(w)) continue;
        return mu_log(J.field(), zeta, w, ell);
    }
    throw internal_error("Weil pairing stayed trivial after " + std::to_string(cap) + " samples");
}

}  // namespace

MumfordDivisor cofactor_image(const HyperellipticJacobian& J, const MumfordDivisor& R, std::uint64_t alpha,
                              std::uint64_t beta, std::uint64_t ell) {
    // T^2 - s T + t
    std::uint64_t s = (alpha + beta) % ell, t = mulmod(alpha, beta, ell);
    auto R1 = J.frobenius(R), R2 = J.frobenius(R1);
    auto Q = J.sub(R2, J.mul(static_cast<std::int64_t>(s), R1));
    return J.add(Q, J.mul(static_cast<std::int64_t>(t), R));
}

std::optional<WitnessPrime> check_witness(const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell,
                                          std::uint64_t p) {
    if (ell < 3 || p == 2 || p == ell) return std::nullopt;
    if (X.conductor % p == 0 || X.discriminant() % p == 0) return std::nullopt;
    if (!Y.is_good(p) || Y.discriminant() % p == 0) return std::nullopt;
    std::int64_t a = ap_elliptic(X, p);
    PrimeField F(ell);
    std::uint64_t ar = F.reduce_signed(a), pr = p % ell;
    if (F.mul(ar, ar) != F.mul(4, pr)) return std::nullopt;
    std::uint64_t gamma = F.mul(ar, F.inv(2));

    // F_{Y,p} mod l divided by (T - gamma)^2
    auto fy = reduce_poly_mod(frobenius_polynomial(Y, p).poly(), ell);  // ascending, degree 4
    std::vector<std::uint64_t> q = fy;
    for (int rep = 0; rep < 2; ++rep) {  // synthetic division by T - gamma
        std::vector<std::uint64_t> out(q.size() - 1);
        std::uint64_t carry = 0;
        for (std::size_t i = q.size(); i-- > 1;) {
            carry = F.add(q[i], F.mul(carry, gamma));
            out[i - 1] = carry;
        }
        if (F.add(q[0], F.mul(carry, gamma)) != 0) return std::nullopt;
        q = out;
    }
    // q = T^2 + q1 T + q0 = (T - alpha)(T - beta)
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < ell; ++x)
        if (F.add(F.add(F.mul(x, x), F.mul(q[1], x)), q[0]) == 0) roots.push_back(x);
    if (roots.empty()) return std::nullopt;
    std::uint64_t alpha = roots.front(), beta = roots.size() == 2 ? roots.back() : alpha;
    if (alpha == gamma || beta == gamma) return std::nullopt;  // then all four agree
    if (alpha == beta) return std::nullopt;                     // two distinct double roots

    if (!non_diagonalizable(X, p, a, gamma, ell)) return std::nullopt;

    unsigned nx = static_cast<unsigned>(torsion_field_degree(elliptic_charpoly(a, p), ell));
    unsigned ny = static_cast<unsigned>(torsion_field_degree(frobenius_polynomial(Y, p).poly(), ell));
    unsigned n = working_degree(Y, p, std::lcm(nx, ny));
    return WitnessPrime{p, a, alpha, beta, gamma, n};
}

std::optional<WitnessPrime> find_witness_prime(const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell,
                                               std::uint64_t search_bound) {
    for (auto p : primes_up_to(search_bound))
        if (auto w = check_witness(X, Y, ell, p)) return w;
    return std::nullopt;
}

SymplecticVerdict symplectic_type(const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell,
                                  const WitnessPrime& w, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint64_t p = w.p;
    auto K = std::make_shared<ExtensionField>(PrimeField(p), w.degree);
    Fq zeta = root_of_unity(*K, ell);

    SymplecticVerdict v;
    v.ell = ell;
    v.witness = w;

    auto E = jacobian_of(X, K);
    auto BX = torsion_basis(E, jac_order(elliptic_charpoly(w.a_X, p), w.degree), ell, rng);
    v.w1 = frobenius_pairing_log(E, BX, zeta, ell, rng, [](const MumfordDivisor& P) { return P; }, v.attempts_X);

    auto J = jacobian_of(Y, K);
    auto BY = torsion_basis(J, jac_order(frobenius_polynomial(Y, p), w.degree), ell, rng);
    v.w2 = frobenius_pairing_log(
        J, BY, zeta, ell, rng, [&](const MumfordDivisor& R) { return cofactor_image(J, R, w.alpha, w.beta, ell); },
        v.attempts_Y);

    v.type = is_square_mod(mulmod(v.w1, v.w2, ell), ell) ? SymplecticType::positive : SymplecticType::negative;
    return v;
}

SymplecticVerdict symplectic_type(const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell, std::uint64_t p,
                                  std::uint64_t seed) {
    auto w = check_witness(X, Y, ell, p);
    if (!w) throw invalid_argument(std::to_string(p) + " is not a witness prime for " + X.label + " / " + Y.label);
    return symplectic_type(X, Y, ell, *w, seed);
}

SymplecticVerdict symplectic_verdict(const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell,
                                     std::uint64_t seed, std::uint64_t search_bound) {
    if (auto w = find_witness_prime(X, Y, ell, search_bound)) return symplectic_type(X, Y, ell, *w, seed);
    SymplecticVerdict v;
    v.ell = ell;
    return v;
}

SymplecticVerdict self_symplectic_type(const EllipticCurve& X, std::uint64_t ell, std::uint64_t p,
                                       std::uint64_t seed) {
    std::int64_t a = ap_elliptic(X, p);
    auto cp = elliptic_charpoly(a, p);
    PrimeField F(ell);
    std::uint64_t ar = F.reduce_signed(a);
    if (F.mul(ar, ar) != F.mul(4, p % ell) || !non_diagonalizable(X, p, a, F.mul(ar, F.inv(2)), ell))
        throw invalid_argument("Frobenius at " + std::to_string(p) + " is diagonalizable on " + X.label);
    unsigned n = static_cast<unsigned>(torsion_field_degree(cp, ell));
    auto K = std::make_shared<ExtensionField>(PrimeField(p), n);
    std::mt19937_64 rng(seed);
    Fq zeta = root_of_unity(*K, ell);
    auto E = jacobian_of(X, K);
    auto B = torsion_basis(E, jac_order(cp, n), ell, rng);
    SymplecticVerdict v;
    v.ell = ell;
    auto id = [](const MumfordDivisor& P) { return P; };
    v.w1 = frobenius_pairing_log(E, B, zeta, ell, rng, id, v.attempts_X);
    v.w2 = frobenius_pairing_log(E, B, zeta, ell, rng, id, v.attempts_Y);
    v.type = is_square_mod(mulmod(v.w1, v.w2, ell), ell) ? SymplecticType::positive : SymplecticType::negative;
    return v;
}

std::optional<bool> antisymplectic_exists(SymplecticType t, std::uint64_t ell) {
    if (t == SymplecticType::fail) return std::nullopt;
    return (t == SymplecticType::positive) != (ell % 4 == 3);
}

}  // namespace glue
