#include "glue/models/point_count.hpp"

#include <cmath>

#include "glue/algebra/fp_poly.hpp"
#include "glue/errors.hpp"

namespace glue {

IntPoly FrobeniusData::poly() const {
    Integer P = from_u64(p);
    return IntPoly(std::vector<Integer>{P * P, -P * Integer(static_cast<long>(a)), Integer(static_cast<long>(a_prime)),
                                        Integer(static_cast<long>(-a)), Integer(1)});
}

bool FrobeniusData::satisfies_weil() const {
    // F(T)/T^2 = s^2 - a s + (a' - 2p) with s = T + p/T; all |roots| = sqrt p iff both s are real in [-2 sqrt p, 2 sqrt p]
    long double pp = static_cast<long double>(p);
    long double disc = static_cast<long double>(a) * a - 4.0L * (static_cast<long double>(a_prime) - 2.0L * pp);
    if (disc < -1e-9L) return false;
    if (disc < 0) disc = 0;
    long double r = std::sqrt(disc);
    long double bound = 2.0L * std::sqrt(pp) + 1e-9L;
    long double s1 = (a + r) / 2.0L, s2 = (a - r) / 2.0L;
    return std::fabs(s1) <= bound && std::fabs(s2) <= bound;
}

std::vector<std::int8_t> legendre_table(std::uint64_t p) {
    std::vector<std::int8_t> chi(p, -1);
    chi[0] = 0;
    if (p == 2) {
        chi[1] = 1;
        return chi;
    }
    for (std::uint64_t x = 1; x <= p / 2; ++x) chi[x * x % p] = 1;
    return chi;
}

namespace {

void require_good_model(const GenusTwoCurve& Y, std::uint64_t p) {
    Integer D = Y.discriminant();
    if (mpz_divisible_ui_p(D.get_mpz_t(), p))
        throw bad_reduction(p, Y.label + ": model has bad reduction at " + std::to_string(p));
}

// absolute trace F_q -> F_2
std::uint64_t trace2(const ExtensionField& K, const Fq& z) {
    Fq t = z, s = z;
    for (unsigned i = 1; i < K.degree(); ++i) {
        t = K.frobenius(t);
        s = K.add(s, t);
    }
    return s[0];
}

// number of y in K with y^2 + b y = c
unsigned quadratic_solutions(const ExtensionField& K, const Fq& b, const Fq& c) {
    if (K.characteristic() == 2) {
        if (K.is_zero(b)) return 1;
        Fq z = K.div(c, K.sqr(b));
        return trace2(K, z) == 0 ? 2 : 0;
    }
    Fq disc = K.add(K.sqr(b), K.scale(c, 4));
    if (K.is_zero(disc)) return 1;
    return K.is_square(disc) ? 2 : 0;
}

// quadratic character via the norm down to F_p
int quad_char(const ExtensionField& K, const std::vector<std::int8_t>& chi, const Fq& a) {
    if (K.is_zero(a)) return 0;
    Fq n = a, t = a;
    for (unsigned i = 1; i < K.degree(); ++i) {
        t = K.frobenius(t);
        n = K.mul(n, t);
    }
    return chi[n[0]];
}

}  // namespace

Integer count_points_g2(const GenusTwoCurve& Y, const ExtensionField& K) {
    const std::uint64_t p = K.characteristic();
    require_good_model(Y, p);
    auto lift = [&](const IntPoly& P) {
        std::vector<Fq> c;
        for (auto v : P.mod_u64(p)) c.push_back(K.from_base(v));
        return c;
    };
    auto ev = [&](const std::vector<Fq>& c, const Fq& x) {
        Fq r = K.zero();
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = K.add(K.mul(r, x), *it);
        return r;
    };
    Integer total = 0;
    Fq h3 = K.from_base(Y.h[3] == 0 ? 0 : to_u64(mod(Y.h[3], from_u64(p))));
    Fq f6 = K.from_base(to_u64(mod(Y.f[6], from_u64(p))));
    total += quadratic_solutions(K, h3, f6);

    Fq x = K.zero();
    const unsigned k = K.degree();
    if (p == 2) {
        auto fc = lift(Y.f), hc = lift(Y.h);
        while (true) {
            total += quadratic_solutions(K, ev(hc, x), ev(fc, x));
            unsigned i = 0;
            while (i < k && ++x[i] == p) x[i++] = 0;
            if (i == k) break;
        }
        return total;
    }
    auto chi = legendre_table(p);
    auto Fc = lift(Y.completed());
    while (true) {
        total += 1 + quad_char(K, chi, ev(Fc, x));
        unsigned i = 0;
        while (i < k && ++x[i] == p) x[i++] = 0;
        if (i == k) break;
    }
    return total;
}

std::uint64_t count_points_g2_prime(const GenusTwoCurve& Y, std::uint64_t p) {
    if (p == 2) return to_u64(count_points_g2(Y, ExtensionField(PrimeField(p), 1)));
    require_good_model(Y, p);
    PrimeField F(p);
    auto chi = legendre_table(p);
    fp::Poly Fc = Y.completed().mod_u64(p);
    Fc.resize(7, 0);
    // points at infinity: 1 + chi(F_6) if F_6 != 0, else 1
    std::uint64_t total = Fc[6] ? static_cast<std::uint64_t>(1 + chi[Fc[6]]) : 1;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = Fc[6];
        for (int i = 5; i >= 0; --i) v = F.add(F.mul(v, x), Fc[i]);
        total += static_cast<std::uint64_t>(1 + chi[v]);
    }
    return total;
}

std::int64_t trace_g2(const GenusTwoCurve& Y, std::uint64_t p) {
    if (!Y.is_good(p)) throw bad_reduction(p, Y.label + ": p divides the conductor");
    return static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(count_points_g2_prime(Y, p));
}

FrobeniusData frobenius_polynomial(const GenusTwoCurve& Y, std::uint64_t p) {
    if (!Y.is_good(p)) throw bad_reduction(p, Y.label + ": p divides the conductor");
    std::int64_t N1 = static_cast<std::int64_t>(count_points_g2_prime(Y, p));
    Integer N2 = count_points_g2(Y, ExtensionField(PrimeField(p), 2));
    std::int64_t a = static_cast<std::int64_t>(p) + 1 - N1;
    Integer P = from_u64(p);
    Integer twice = Integer(static_cast<long>(a)) * a - (P * P + 1 - N2);
    if (!mpz_even_p(twice.get_mpz_t())) throw internal_error(Y.label + ": odd a' numerator at p = " + std::to_string(p));
    FrobeniusData d{p, a, static_cast<std::int64_t>(Integer(twice / 2).get_si())};
    if (!d.satisfies_weil()) throw internal_error(Y.label + ": Frobenius data violates the Weil bound at p = " + std::to_string(p));
    return d;
}

std::uint64_t count_points_elliptic(const EllipticCurve& X, std::uint64_t p) {
    PrimeField F(p);
    std::uint64_t total = 1;
    if (p == 2) {
        std::uint64_t a1 = F.reduce(X.a[0]), a2 = F.reduce(X.a[1]), a3 = F.reduce(X.a[2]),
                      a4 = F.reduce(X.a[3]), a6 = F.reduce(X.a[4]);
        for (std::uint64_t x = 0; x < 2; ++x)
            for (std::uint64_t y = 0; y < 2; ++y) {
                std::uint64_t lhs = (y * y + a1 * x * y + a3 * y) & 1;
                std::uint64_t rhs = (x * x * x + a2 * x * x + a4 * x + a6) & 1;
                total += lhs == rhs;
            }
        return total;
    }
    auto chi = legendre_table(p);
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    std::uint64_t b2 = F.reduce(X.b2()), b4 = F.reduce(X.b4()), b6 = F.reduce(X.b6());
    std::uint64_t c3 = 4 % p, c2 = b2, c1 = F.mul(2, b4), c0 = b6;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = F.add(F.mul(F.add(F.mul(F.add(F.mul(c3, x), c2), x), c1), x), c0);
        total += static_cast<std::uint64_t>(1 + chi[v]);
    }
    return total;
}

Reduction reduction_type(const EllipticCurve& X, std::uint64_t p) {
    unsigned e = X.conductor_valuation(p);
    if (e == 0) return Reduction::good;
    if (e >= 2) return Reduction::additive;
    if (p == 2) {
        // node: count points on the reduced curve, singular point included
        std::int64_t ap = 3 - static_cast<std::int64_t>(count_points_elliptic(X, 2));
        if (ap == 1) return Reduction::split_mult;
        if (ap == -1) return Reduction::nonsplit_mult;
        throw internal_error(X.label + ": model at 2 is not minimal multiplicative");
    }
    // -c6 of the p-minimal model; scaling by u^6 keeps the square class, so divide out p^{6k}
    Integer c4 = X.c4(), c6 = X.c6();
    Integer P = from_u64(p);
    if (c4 == 0) throw internal_error(X.label + ": j = 0 curve cannot be multiplicative");
    unsigned v4 = valuation(c4, P);
    if (v4 % 4 != 0) throw internal_error(X.label + ": unexpected c4 valuation at multiplicative prime");
    Integer u6;
    mpz_pow_ui(u6.get_mpz_t(), P.get_mpz_t(), 6 * (v4 / 4));
    Integer c6m = c6 / u6;
    PrimeField F(p);
    int s = F.legendre(F.reduce(-c6m));
    if (s == 0) throw internal_error(X.label + ": c6 vanishes at a multiplicative prime");
    return s == 1 ? Reduction::split_mult : Reduction::nonsplit_mult;
}

std::int64_t ap_elliptic(const EllipticCurve& X, std::uint64_t p) {
    switch (reduction_type(X, p)) {
        case Reduction::good:
            return static_cast<std::int64_t>(p) + 1 - static_cast<std::int64_t>(count_points_elliptic(X, p));
        case Reduction::split_mult: return 1;
        case Reduction::nonsplit_mult: return -1;
        case Reduction::additive: return 0;
    }
    return 0;
}

}  // namespace glue
