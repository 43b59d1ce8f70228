#include "glue/jacobian/pairing.hpp"

#include <array>

#include "glue/errors.hpp"

namespace glue {

using fq::Poly;

Fq root_of_unity(const ExtensionField& K, std::uint64_t ell) {
    Integer q1 = K.order() - 1;
    if (q1 % ell != 0) throw invalid_argument("root_of_unity: l does not divide q - 1");
    Integer e = q1 / ell;
    Fq t = K.gen();
    for (std::uint64_t c = 1; c < 1000; ++c) {
        Fq z = K.pow(K.add(t, K.from_base(c % K.characteristic())), e);
        if (!K.is_one(z) && !K.is_zero(z)) return z;
    }
    throw internal_error("root_of_unity: no generator found");
}

std::uint64_t mu_log(const ExtensionField& K, const Fq& zeta, const Fq& w, std::uint64_t ell) {
    Fq z = K.one();
    for (std::uint64_t s = 0; s < ell; ++s) {
        if (z == w) return s;
        z = K.mul(z, zeta);
    }
    throw internal_error("mu_log: value is not an l-th root of unity");
}

namespace {

// prod over the points of (u, v) of a(x) + b(x) y, u monic of degree <= 2
Fq norm_at(const ExtensionField& K, const MumfordDivisor& at, const Poly& g) {
    const int d = fq::degree(at.u);
    if (d <= 0) return K.one();
    Poly r = fq::rem(K, g, at.u);
    Fq a = r.size() > 0 ? r[0] : K.zero();
    Fq b = r.size() > 1 ? r[1] : K.zero();
    if (d == 1) return a;  // r is already the value at the root
    const Fq& c0 = at.u[0];
    const Fq& c1 = at.u[1];
    // (a + b r1)(a + b r2) with r1 + r2 = -c1, r1 r2 = c0
    return K.add(K.sub(K.mul(a, a), K.mul(K.mul(a, b), c1)), K.mul(K.mul(b, b), c0));
}

struct Frac {
    Fq num, den;
};

// value of the recorded function at an effective divisor; false on a zero/pole hit
bool eval_function(const ExtensionField& K, const MillerFunction& h, const MumfordDivisor& at, Frac& acc) {
    for (auto& a : h.x_num) {
        Fq v = norm_at(K, at, a);
        if (K.is_zero(v)) return false;
        acc.num = K.mul(acc.num, v);
    }
    for (auto& line : h.lines) {
        Fq v = norm_at(K, at, fq::sub(K, at.v, line));
        if (K.is_zero(v)) return false;
        acc.num = K.mul(acc.num, v);
    }
    for (auto& a : h.x_den) {
        Fq v = norm_at(K, at, a);
        if (K.is_zero(v)) return false;
        acc.den = K.mul(acc.den, v);
    }
    return true;
}

// f with div f = l D - [l D], evaluated at two effective divisors
bool miller(const HyperellipticJacobian& J, const MumfordDivisor& D, std::uint64_t ell,
            const std::array<const MumfordDivisor*, 2>& at, std::array<Frac, 2>& out) {
    const auto& K = J.field();
    for (auto& f : out) f = {K.one(), K.one()};
    MumfordDivisor T = D;
    int top = 63;
    while (!((ell >> top) & 1)) --top;
    for (int i = top - 1; i >= 0; --i) {
        MillerFunction h;
        T = J.add(T, T, &h);
        for (std::size_t k = 0; k < 2; ++k) {
            out[k].num = K.sqr(out[k].num);
            out[k].den = K.sqr(out[k].den);
            if (!eval_function(K, h, *at[k], out[k])) return false;
        }
        if ((ell >> i) & 1) {
            MillerFunction h2;
            T = J.add(T, D, &h2);
            for (std::size_t k = 0; k < 2; ++k)
                if (!eval_function(K, h2, *at[k], out[k])) return false;
        }
    }
    return true;
}

}  // namespace

Fq weil_pairing(const HyperellipticJacobian& J, const MumfordDivisor& A, const MumfordDivisor& B, std::uint64_t ell,
                std::mt19937_64& rng) {
    const auto& K = J.field();
    if (A.is_identity() || B.is_identity()) return K.one();
    for (int attempt = 0; attempt < 32; ++attempt) {
        MumfordDivisor R1 = J.random(rng), R2 = J.random(rng);
        MumfordDivisor E1 = J.add(A, R1), E2 = J.add(B, R2);
        if (fq::degree(E1.u) != fq::degree(R1.u) || fq::degree(E2.u) != fq::degree(R2.u)) continue;
        if (E1.is_identity() || E2.is_identity()) continue;
        // f_{A'}(B') = f_E1(E2) f_R1(R2) / (f_E1(R2) f_R1(E2))
        std::array<Frac, 2> fE1, fR1, fE2, fR2;
        if (!miller(J, E1, ell, {&E2, &R2}, fE1)) continue;
        if (!miller(J, R1, ell, {&E2, &R2}, fR1)) continue;
        if (!miller(J, E2, ell, {&E1, &R1}, fE2)) continue;
        if (!miller(J, R2, ell, {&E1, &R1}, fR2)) continue;
        Fq num = K.one(), den = K.one();
        auto mul_in = [&](const Frac& f, bool up) {
            num = K.mul(num, up ? f.num : f.den);
            den = K.mul(den, up ? f.den : f.num);
        };
        mul_in(fE1[0], true);
        mul_in(fR1[1], true);
        mul_in(fE1[1], false);
        mul_in(fR1[0], false);
        // divided by f_{B'}(A')
        mul_in(fE2[0], false);
        mul_in(fR2[1], false);
        mul_in(fE2[1], true);
        mul_in(fR2[0], true);
        if (K.is_zero(num) || K.is_zero(den)) continue;
        Fq e = K.div(num, den);
        if (!K.is_one(K.pow(e, ell))) throw internal_error("weil_pairing: value is not an l-th root of unity");
        return e;
    }
    throw internal_error("weil_pairing: 32 offsets all collided with the Miller supports");
}

}  // namespace glue
