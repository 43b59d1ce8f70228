#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "glue/algebra/ext_field.hpp"
#include "glue/algebra/fq_poly.hpp"
#include "glue/models/curves.hpp"

namespace glue {

// reduced divisor class D_eff - deg(u) inf on an imaginary model y^2 = G(x)
struct MumfordDivisor {
    fq::Poly u;  // monic, deg <= g
    fq::Poly v;  // deg v < deg u
    bool is_identity() const { return fq::degree(u) == 0; }
    bool operator==(const MumfordDivisor& o) const { return fq::equal(u, o.u) && fq::equal(v, o.v); }
};

struct MumfordHash {
    std::size_t operator()(const MumfordDivisor& d) const;
};

// affine point, or infinity, on the original Weierstrass model of an elliptic curve
struct EcPoint {
    bool infinity = true;
    Fq x, y;
    bool operator==(const EcPoint&) const = default;
};

// The function recorded by one Cantor step: with D1 + D2 = D3 as classes,
// div(h) = D1 + D2 - D3, h = prod x_num(x) * prod (y - line(x)) / prod x_den(x).
struct MillerFunction {
    std::vector<fq::Poly> x_num, x_den, lines;
};

// Jacobian of y^2 = G(x), deg G = 2g + 1 (g = 1, 2), over a finite field K of
// odd characteristic. G comes from a model over F_p, possibly after moving a
// Weierstrass point x = r to infinity; `frobenius` is the p-power map of the
// original curve transported to this model.
class HyperellipticJacobian {
public:
    HyperellipticJacobian(std::shared_ptr<const ExtensionField> K, fq::Poly G);

    unsigned genus() const { return g_; }
    const ExtensionField& field() const { return *K_; }
    std::shared_ptr<const ExtensionField> field_ptr() const { return K_; }
    const fq::Poly& G() const { return G_; }

    MumfordDivisor identity() const;
    bool is_valid(const MumfordDivisor& D) const;
    MumfordDivisor neg(const MumfordDivisor& D) const;
    MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) const;
    MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b, MillerFunction* h) const;
    MumfordDivisor sub(const MumfordDivisor& a, const MumfordDivisor& b) const { return add(a, neg(b)); }
    MumfordDivisor mul(const Integer& n, const MumfordDivisor& D) const;
    MumfordDivisor mul(std::int64_t n, const MumfordDivisor& D) const { return mul(Integer(static_cast<long>(n)), D); }

    // the class of P - inf; nullopt when x is not an abscissa over K
    std::optional<MumfordDivisor> point(const Fq& x, bool other_root = false) const;
    MumfordDivisor random_point(std::mt19937_64& rng) const;
    // sum of g random points: hits every class for the field sizes used here
    MumfordDivisor random(std::mt19937_64& rng) const;

    MumfordDivisor frobenius(const MumfordDivisor& D) const;
    // p-power map applied k times
    MumfordDivisor frobenius(const MumfordDivisor& D, unsigned k) const;

    // twist data: inf goes to (1/delta, 0) under Frobenius when delta != 0
    void set_twist(const Fq& delta);
    bool twisted() const { return twisted_; }

private:
    MumfordDivisor reduce(fq::Poly u, fq::Poly v, MillerFunction* h) const;

    std::shared_ptr<const ExtensionField> K_;
    fq::Poly G_;
    unsigned g_;
    bool twisted_ = false;
    Fq delta_;
    MumfordDivisor frob_inf_;  // class of (1/delta, 0) - inf
};

// Working field for a witness computation: F_{p^n}, enlarged to contain a root
// of h^2 + 4f when that sextic has none over F_p-power fields dividing n.
unsigned working_degree(const GenusTwoCurve& Y, std::uint64_t p, unsigned n);

// imaginary model of Y over K: y^2 = h^2 + 4f directly when that has degree 5,
// otherwise a Weierstrass root r is sent to infinity (the least root over F_p if any)
HyperellipticJacobian jacobian_of(const GenusTwoCurve& Y, std::shared_ptr<const ExtensionField> K);
// y^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
HyperellipticJacobian jacobian_of(const EllipticCurve& X, std::shared_ptr<const ExtensionField> K);

// genus-1 dictionary with the original Weierstrass coordinates (y = (y' - a1 x - a3)/2)
EcPoint to_ec_point(const EllipticCurve& X, const HyperellipticJacobian& E, const MumfordDivisor& D);
MumfordDivisor from_ec_point(const EllipticCurve& X, const HyperellipticJacobian& E, const EcPoint& P);

}  // namespace glue
