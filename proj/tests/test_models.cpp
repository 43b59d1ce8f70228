#include <doctest.h>

#include <cmath>
#include <map>

#include "glue/errors.hpp"
#include "glue/models/point_count.hpp"
#include "fixtures.hpp"

using namespace glue;

namespace {

// F_{p^2} = F_p[i]/(i^2 - n), written out independently of ExtensionField
struct Fp2 {
    std::int64_t p, n;
    struct E {
        std::int64_t a, b;
        bool operator==(const E&) const = default;
    };
    E add(E x, E y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
    E mul(E x, E y) const {
        return {(x.a * y.a + n * (x.b * y.b % p)) % p, (x.a * y.b + x.b * y.a) % p};
    }
    E c(std::int64_t v) const { return {((v % p) + p) % p, 0}; }
};

std::int64_t nonresidue(std::int64_t p) {
    for (std::int64_t n = 2;; ++n) {
        bool sq = false;
        for (std::int64_t x = 0; x < p; ++x)
            if (x * x % p == n % p) sq = true;
        if (!sq) return n;
    }
}

// count (x, y) pairs directly plus the infinity rule by direct search
std::int64_t brute_count(const GenusTwoCurve& Y, std::int64_t p, bool square_field) {
    Fp2 K{p, p == 2 ? 1 : nonresidue(p)};
    std::vector<Fp2::E> elems;
    if (!square_field) {
        for (std::int64_t a = 0; a < p; ++a) elems.push_back({a, 0});
    } else if (p == 2) {
        // F_4 = F_2[w]/(w^2 + w + 1): handled separately below
    } else {
        for (std::int64_t a = 0; a < p; ++a)
            for (std::int64_t b = 0; b < p; ++b) elems.push_back({a, b});
    }
    if (square_field && p == 2) {
        // elements a + b w, w^2 = w + 1
        auto mul4 = [](Fp2::E x, Fp2::E y) {
            std::int64_t a = x.a * y.a + x.b * y.b;
            std::int64_t b = x.a * y.b + x.b * y.a + x.b * y.b;
            return Fp2::E{a & 1, b & 1};
        };
        auto add4 = [](Fp2::E x, Fp2::E y) { return Fp2::E{(x.a + y.a) & 1, (x.b + y.b) & 1}; };
        std::vector<Fp2::E> e4{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        auto ev = [&](const IntPoly& P, Fp2::E x) {
            Fp2::E r{0, 0};
            for (int i = P.degree(); i >= 0; --i) r = add4(mul4(r, x), Fp2::E{mod_small(P[i], 2), 0});
            return r;
        };
        std::int64_t n = 0;
        for (auto x : e4)
            for (auto y : e4)
                if (add4(mul4(y, y), mul4(ev(Y.h, x), y)) == ev(Y.f, x)) ++n;
        Fp2::E h3{mod_small(Y.h[3], 2), 0}, f6{mod_small(Y.f[6], 2), 0};
        for (auto y : e4)
            if (add4(mul4(y, y), mul4(h3, y)) == f6) ++n;
        return n;
    }
    auto ev = [&](const IntPoly& P, Fp2::E x) {
        Fp2::E r{0, 0};
        for (int i = P.degree(); i >= 0; --i) r = K.add(K.mul(r, x), K.c(mod_small(P[i], p)));
        return r;
    };
    std::int64_t n = 0;
    for (auto x : elems) {
        Fp2::E hx = ev(Y.h, x), fx = ev(Y.f, x);
        for (auto y : elems)
            if (K.add(K.mul(y, y), K.mul(hx, y)) == fx) ++n;
    }
    Fp2::E h3 = K.c(mod_small(Y.h[3], p)), f6 = K.c(mod_small(Y.f[6], p));
    for (auto y : elems)
        if (K.add(K.mul(y, y), K.mul(h3, y)) == f6) ++n;
    return n;
}

}  // namespace

TEST_CASE("Frobenius polynomial of 277.a.277.1 at 13") {
    auto Y = fixtures::curve_277();
    auto d = frobenius_polynomial(Y, 13);
    CHECK(d.a == 3);
    CHECK(d.a_prime == 7);
    CHECK(d.poly() == IntPoly{169, -39, 7, -3, 1});
    CHECK(count_points_g2(Y, ExtensionField(PrimeField(13), 1)) == 11);
    CHECK(count_points_g2(Y, ExtensionField(PrimeField(13), 2)) == 175);
}

TEST_CASE("Frobenius polynomial of 353.a.353.1 at 2 resolves the misprinted display") {
    auto Y = fixtures::curve_353();
    auto d = frobenius_polynomial(Y, 2);
    CHECK(d.a == -1);
    CHECK(d.a_prime == 3);
    CHECK(d.poly() == IntPoly{4, 2, 3, 1, 1});
}

TEST_CASE("Frobenius data against frozen PARI charpolys") {
    // hyperellcharpoly values for the shipped curves
    for (auto& [Y, table] : fixtures::frozen_charpolys()) {
        for (auto& [p, a, ap] : table) {
            auto d = frobenius_polynomial(Y, p);
            CHECK_MESSAGE(d.a == a, Y.label << " p=" << p);
            CHECK_MESSAGE(d.a_prime == ap, Y.label << " p=" << p);
        }
    }
}

TEST_CASE("bad primes are refused") {
    auto Y = fixtures::curve_277();
    CHECK_THROWS_AS(frobenius_polynomial(Y, 277), bad_reduction);
    try {
        frobenius_polynomial(Y, 277);
    } catch (const bad_reduction& e) {
        CHECK(e.prime == 277);
    }
}

TEST_CASE("point counts agree with brute-force enumeration, p <= 7, ten curves") {
    int checked = 0;
    for (auto& Y : fixtures::small_curves()) {
        for (std::int64_t p : {2, 3, 5, 7}) {
            if (mpz_divisible_ui_p(Y.discriminant().get_mpz_t(), p)) continue;
            std::int64_t n1 = brute_count(Y, p, false), n2 = brute_count(Y, p, true);
            CHECK_MESSAGE(static_cast<std::int64_t>(count_points_g2_prime(Y, p)) == n1, Y.label << " p=" << p);
            CHECK(count_points_g2(Y, ExtensionField(PrimeField(p), 1)) == n1);
            CHECK_MESSAGE(count_points_g2(Y, ExtensionField(PrimeField(p), 2)) == n2, Y.label << " p=" << p);
            // Weil bounds on the raw counts
            CHECK(std::abs(n1 - (p + 1)) <= 4 * std::sqrt(double(p)));
            CHECK(std::abs(n2 - (p * p + 1)) <= 8 * p);
            ++checked;
        }
    }
    CHECK(checked >= 25);
}

TEST_CASE("F(1) is the Jacobian order; Weil invariant holds") {
    auto Y = fixtures::curve_277();
    std::map<std::uint64_t, std::int64_t> jac{{2, 15}, {3, 15}, {5, 30}, {7, 45}, {11, 150}, {13, 135}};
    for (auto [p, n] : jac) {
        auto d = frobenius_polynomial(Y, p);
        CHECK(d.poly().eval(1) == n);
        CHECK(d.satisfies_weil());
        // T^4 F(p/T) = p^2 F(T)
        auto F = d.poly();
        for (std::int64_t t = 1; t < 6; ++t) {
            mpq_class lhs = mpq_class(t * t * t * t) * 0, rhs;
            mpq_class x(Integer(static_cast<long>(p)), Integer(t));
            mpq_class v = 0;
            for (int i = 4; i >= 0; --i) v = v * x + mpq_class(F[i]);
            lhs = v * t * t * t * t;
            rhs = mpq_class(F.eval(t)) * Integer(static_cast<long>(p * p));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("elliptic traces: 277 candidates against frozen values") {
    for (auto& [X, table] : fixtures::frozen_elliptic_traces())
        for (auto& [p, ap] : table) CHECK_MESSAGE(ap_elliptic(X, p) == ap, X.label << " p=" << p);
}

TEST_CASE("elliptic traces: table count agrees with a character sum, p <= 1000") {
    for (auto& X : fixtures::small_elliptic()) {
        for (auto p : primes_up_to(1000)) {
            if (p == 2 || mpz_divisible_ui_p(X.discriminant().get_mpz_t(), p)) continue;
            // sum over x of Euler's criterion on 4x^3 + b2 x^2 + 2 b4 x + b6
            std::int64_t b2 = mod_small(X.b2(), p), b4 = mod_small(X.b4(), p), b6 = mod_small(X.b6(), p);
            std::int64_t s = 0;
            for (std::uint64_t x = 0; x < p; ++x) {
                std::uint64_t v = (4 * x % p * x % p * x + b2 * x % p * x + 2 * b4 * x + b6) % p;
                if (v == 0) continue;
                s += powmod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
            }
            // a_p = -sum chi
            if (!mpz_divisible_ui_p(X.conductor.get_mpz_t(), p)) CHECK(ap_elliptic(X, p) == -s);
            CHECK(static_cast<std::int64_t>(count_points_elliptic(X, p)) == static_cast<std::int64_t>(p) + 1 + s);
        }
    }
}

TEST_CASE("reduction types") {
    auto X1 = fixtures::candidates_277()[0];
    auto r7 = reduction_type(X1, 7);
    CHECK((r7 == Reduction::split_mult || r7 == Reduction::nonsplit_mult));
    CHECK(reduction_type(X1, 5) == Reduction::good);
    // frozen against PARI's ellap at bad primes
    for (auto& [X, table] : fixtures::frozen_bad_traces())
        for (auto& [p, ap] : table) CHECK_MESSAGE(ap_elliptic(X, p) == ap, X.label << " p=" << p);
    // exactly the conductor primes are non-good
    for (auto& X : fixtures::candidates_277())
        for (auto p : primes_up_to(400))
            CHECK((reduction_type(X, p) != Reduction::good) == mpz_divisible_ui_p(X.conductor.get_mpz_t(), p));
}
