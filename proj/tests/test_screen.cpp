#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "glue/errors.hpp"
#include "glue/models/point_count.hpp"
#include "glue/screen/sieve.hpp"
#include "glue/screen/trace.hpp"
#include "fixtures.hpp"

using namespace glue;
using namespace fixtures;

namespace {

std::set<std::uint64_t> as_set(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

std::uint64_t mod_l(std::int64_t a, std::uint64_t l) {
    std::int64_t L = static_cast<std::int64_t>(l);
    return static_cast<std::uint64_t>(((a % L) + L) % L);
}

// F_{Y,p}(x) mod l straight from (a, a')
std::uint64_t frob_eval(const FrobeniusData& F, std::uint64_t x, std::uint64_t l) {
    std::int64_t L = static_cast<std::int64_t>(l), X = static_cast<std::int64_t>(x), P = static_cast<std::int64_t>(F.p % l);
    std::int64_t a = mod_l(F.a, l), ap = mod_l(F.a_prime, l);
    std::int64_t x2 = X * X % L, x3 = x2 * X % L, x4 = x3 * X % L;
    std::int64_t v = x4 - a * x3 % L + ap * x2 % L - P * a % L * X % L + P * P % L;
    return mod_l(v, l);
}

}  // namespace

TEST_CASE("characters: homomorphism, admissible orders, counts") {
    std::mt19937_64 rng(7);
    for (std::uint64_t D : {1ull, 8ull, 13ull, 24ull, 31ull, 65ull, 277ull, 1385ull})
        for (std::uint64_t l : {3ull, 5ull, 7ull, 13ull}) {
            auto chars = all_characters(D, l);
            auto G = unit_group(D);
            std::uint64_t expected = 1;
            for (auto n : G.orders) expected *= std::gcd(n, l - 1);
            CHECK(chars.size() == expected);
            for (auto& chi : chars) {
                CHECK(chi(1) == 1);
                for (std::size_t i = 0; i < G.generators.size(); ++i)
                    CHECK(powmod(chi(G.generators[i]), chi.admissible_orders()[i], l) == 1);
                for (int k = 0; k < 20; ++k) {
                    std::uint64_t a = rng() % D, b = rng() % D;
                    if (std::gcd(a, D) != 1 || std::gcd(b, D) != 1) continue;
                    CHECK(chi(a * b % D) == chi(a) * chi(b) % l);
                }
            }
            // distinct exponent vectors give distinct functions
            std::set<std::vector<std::uint64_t>> tables;
            for (auto& chi : chars) {
                std::vector<std::uint64_t> t;
                for (std::uint64_t a = 0; a < D; ++a)
                    if (std::gcd(a, D) == 1) t.push_back(chi(a));
                tables.insert(t);
            }
            CHECK(tables.size() == chars.size());
        }
    CHECK(all_characters(8, 5).size() == 4);
    CHECK(all_characters(1, 5).size() == 1);
    CHECK(all_characters(1, 5)[0].is_trivial());
    CHECK_THROWS_AS(DirichletCharacter::trivial(8, 5)(4), glue::invalid_argument);
}

TEST_CASE("possible_primes on 277.a.277.1 is {3, 5}") {
    auto Y = curve_277();
    auto P = default_primes(Y);
    CHECK(P.front() == 2);
    CHECK(P.size() == 25);
    CHECK(possible_primes(Y, P) == std::vector<std::uint64_t>{3, 5});
}

TEST_CASE("possible_primes on 353.a.353.1 contains 11") {
    auto Y = curve_353();
    CHECK(as_set(possible_primes(Y, default_primes(Y))).count(11) == 1);
}

TEST_CASE("single prime, prime conductor: divisors of F(1) plus the bad-prime test") {
    for (auto Y : {curve_277(), curve_353(), curve_349()}) {
        std::uint64_t N = to_u64(Y.conductor);
        for (std::uint64_t p : {2ull, 3ull, 7ull, 13ull}) {
            auto F = frobenius_polynomial(Y, p);
            std::set<std::uint64_t> want;
            std::int64_t v = std::llabs(F.poly().eval(1).get_si());
            for (std::int64_t q = 2; q <= v; ++q)
                if (v % q == 0) {
                    want.insert(static_cast<std::uint64_t>(q));
                    while (v % q == 0) v /= q;
                }
            // d' = 1, g_p = order of p mod N; root of F in F_N that is also a g_p-th root of unity
            std::uint64_t g = 1, t = p % N;
            while (t != 1) t = t * p % N, ++g;
            bool shared = false;
            for (std::uint64_t x = 1; x < N; ++x)
                if (frob_eval(F, x, N) == 0 && powmod(x, g, N) == 1) shared = true;
            if (shared) want.insert(N);
            CHECK(as_set(possible_primes(Y, {p})) == want);
        }
    }
}

TEST_CASE("possible_primes is antitone in P") {
    std::mt19937_64 rng(11);
    for (auto Y : {curve_277(), curve_353(), curve_349(), curve_169(), curve_961()}) {
        auto P = default_primes(Y, 60);
        auto full = as_set(possible_primes(Y, P));
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<std::uint64_t> sub;
            for (auto p : P)
                if (rng() % 2) sub.push_back(p);
            if (sub.empty()) sub.push_back(P[0]);
            auto part = as_set(possible_primes(Y, sub));
            CHECK(std::includes(part.begin(), part.end(), full.begin(), full.end()));
        }
    }
}

TEST_CASE("possible_primes rejects bad input") {
    auto Y = curve_277();
    CHECK_THROWS_AS(possible_primes(Y, {}), glue::invalid_argument);
    CHECK_THROWS_AS(possible_primes(Y, {2, 277}), bad_reduction);
}

TEST_CASE("character candidates") {
    auto Y = curve_277();
    CHECK(character_modulus(Y, 5) == 1);
    CHECK(character_modulus(Y, 277) == 277);
    auto c = character_candidates(Y, 5, default_primes(Y));
    REQUIRE(c.size() == 1);
    CHECK(c[0].is_trivial());

    CHECK(character_modulus(curve_169(), 19) == 13);
    CHECK(character_modulus(curve_169(), 13) == 13);
    CHECK(character_modulus(curve_961(), 5) == 31);

    // survivors vanish F_{Y,p} at chi(p) for every p in P
    for (auto Yc : {curve_277(), curve_353(), curve_349(), curve_169(), curve_961()}) {
        auto P = default_primes(Yc);
        for (auto l : possible_primes(Yc, P)) {
            if (l < 3) continue;
            for (auto& chi : character_candidates(Yc, l, P))
                for (auto p : P) {
                    if (p == l || chi.modulus() % p == 0) continue;
                    CHECK(frob_eval(frobenius_polynomial(Yc, p), chi(p), l) == 0);
                }
        }
    }
    // 353 has a rational 11-torsion point: the trivial character is among the survivors
    auto c353 = character_candidates(curve_353(), 11, default_primes(curve_353()));
    CHECK(std::any_of(c353.begin(), c353.end(), [](auto& chi) { return chi.is_trivial(); }));
}

TEST_CASE("trace_b values") {
    TraceFunction t277(curve_277(), 5, DirichletCharacter::trivial(1, 5));
    CHECK(trace_b(t277, 13) == 4);
    TraceFunction t353(curve_353(), 11, DirichletCharacter::trivial(1, 11));
    CHECK(trace_b(t353, 2) == 7);
    CHECK_THROWS_AS(trace_b(t277, 5), glue::invalid_argument);
    CHECK_THROWS_AS(trace_b(t277, 277), glue::invalid_argument);

    // chi(p) + p/chi(p) + b_p = a_{p,Y} mod l
    for (auto Y : {curve_277(), curve_353(), curve_349(), curve_169(), curve_961()})
        for (std::uint64_t l : {3ull, 5ull, 7ull, 11ull, 13ull}) {
            for (auto& chi : all_characters(character_modulus(Y, l), l)) {
                TraceFunction t(Y, l, chi);
                for (auto p : primes_up_to(200)) {
                    if (!t.defined_at(p)) continue;
                    std::uint64_t c = chi(p), b = trace_b(t, p);
                    std::uint64_t lhs = (c + p % l * invmod(c, l) + b) % l;
                    CHECK(lhs == mod_l(trace_g2(Y, p), l));
                }
            }
        }
}

TEST_CASE("nonexistence certificates") {
    TraceFunction t353(curve_353(), 11, DirichletCharacter::trivial(1, 11));
    CHECK(nonexistence_certificate(t353, 2));

    // l = 5, p = 29: [-10, 10] covers F_5
    TraceFunction t277(curve_277(), 5, DirichletCharacter::trivial(1, 5));
    CHECK_FALSE(nonexistence_certificate(t277, 29));

    // pigeonhole: l <= 4 sqrt p + 1 never certifies
    for (auto Y : {curve_277(), curve_349(), curve_353()})
        for (std::uint64_t l : {5ull, 7ull, 11ull, 13ull})
            for (auto p : primes_up_to(100)) {
                TraceFunction t(Y, l, DirichletCharacter::trivial(1, l));
                if (!t.defined_at(p)) continue;
                if (l <= 4.0 * std::sqrt(double(p)) + 1) CHECK_FALSE(nonexistence_certificate(t, p));
            }

    // 349 at l = 13: every surviving character has a witness <= 100
    {
        auto Y = curve_349();
        auto chars = character_candidates(Y, 13, default_primes(Y));
        REQUIRE_FALSE(chars.empty());
        for (auto& chi : chars)
            CHECK_MESSAGE(find_certificate(TraceFunction(Y, 13, chi), primes_up_to(100)).has_value(), chi.str());
    }
    // 169 at l = 19: H is the rational 19-torsion point, chi trivial; witnesses 2 and 3
    {
        auto Y = curve_169();
        TraceFunction t(Y, 19, DirichletCharacter::trivial(13, 19));
        CHECK(find_certificate(t, primes_up_to(100)) == std::optional<std::uint64_t>(2));
        CHECK(nonexistence_certificate(t, 3));
        // the only other survivor has b_p = p + 1 identically, which no
        // certificate can exclude (it is the multiplicative value)
        auto chars = character_candidates(Y, 19, default_primes(Y));
        CHECK(chars.size() == 2);
        for (auto& chi : chars) {
            if (chi.is_trivial()) continue;
            TraceFunction u(Y, 19, chi);
            for (auto p : primes_up_to(400))
                if (u.defined_at(p)) CHECK(trace_b(u, p) == (p + 1) % 19);
            CHECK_FALSE(find_certificate(u, primes_up_to(100)).has_value());
        }
    }
    CHECK_THROWS_AS(nonexistence_certificate(TraceFunction(curve_277(), 3, DirichletCharacter::trivial(1, 3)), 2),
                    glue::invalid_argument);
}
