#include "glue/screen/sieve.hpp"

#include <algorithm>
#include <set>

#include "glue/errors.hpp"
#include "glue/models/point_count.hpp"

namespace glue {

namespace {

IntPoly cyclotomic_like(std::uint64_t f) {
    // T^f - 1
    std::vector<Integer> c(f + 1, Integer(0));
    c[0] = -1;
    c[f] = 1;
    return IntPoly(std::move(c));
}

Integer strip(const Integer& n, const Integer& p) {
    Integer m = n;
    while (m % p == 0) m /= p;
    return m;
}

void check_primes(const GenusTwoCurve& Y, const std::vector<std::uint64_t>& P) {
    if (P.empty()) throw invalid_argument("prime set is empty");
    for (auto p : P)
        if (!Y.is_good(p)) throw bad_reduction(p, Y.label + " has bad reduction at " + std::to_string(p));
}

}  // namespace

std::vector<std::uint64_t> default_primes(const GenusTwoCurve& Y, std::uint64_t bound) {
    Integer disc = Y.discriminant();
    std::vector<std::uint64_t> out;
    for (auto p : primes_up_to(bound))
        if (Y.is_good(p) && !mpz_divisible_ui_p(disc.get_mpz_t(), p)) out.push_back(p);
    return out;
}

SieveResult prime_sieve(const GenusTwoCurve& Y, const std::vector<std::uint64_t>& P) {
    check_primes(Y, P);
    SieveResult r;
    r.d = square_part_root(Y.conductor_factors);

    std::vector<FrobeniusData> frob;
    frob.reserve(P.size());
    for (auto p : P) frob.push_back(frobenius_polynomial(Y, p));

    Integer g = 0;
    for (std::size_t i = 0; i < P.size(); ++i) {
        std::uint64_t f = order_mod(from_u64(P[i]), r.d);
        Integer res = resultant(frob[i].poly(), cyclotomic_like(f));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), res.get_mpz_t());
        if (g == 1) break;
    }
    r.resultant_gcd = abs(g);
    if (g == 0) throw internal_error("prime_sieve: Frobenius polynomial with a root of unity");
    for (auto& [q, _] : factor(r.resultant_gcd)) r.l_good.push_back(to_u64(q));

    for (auto& [Q, _] : Y.conductor_factors) {
        std::uint64_t ell = to_u64(Q);
        Integer dp = square_part_root(factor(strip(Y.conductor, Q)));
        Integer modulus = Q * dp;
        bool all = true;
        for (std::size_t i = 0; i < P.size() && all; ++i) {
            if (mpz_divisible_ui_p(modulus.get_mpz_t(), P[i])) continue;
            std::uint64_t gp = order_mod(from_u64(P[i]), modulus);
            IntPoly F = frob[i].poly();
            bool shared = false;
            for (std::uint64_t x = 1; x < ell && !shared; ++x)
                shared = powmod(x, gp, ell) == 1 && mod_small(F.eval(from_u64(x)), static_cast<std::int64_t>(ell)) == 0;
            all = shared;
        }
        if (all) r.l_bad.push_back(ell);
    }

    std::set<std::uint64_t> u(r.l_good.begin(), r.l_good.end());
    u.insert(r.l_bad.begin(), r.l_bad.end());
    r.primes.assign(u.begin(), u.end());
    return r;
}

std::vector<std::uint64_t> possible_primes(const GenusTwoCurve& Y, const std::vector<std::uint64_t>& P) {
    return prime_sieve(Y, P).primes;
}

std::uint64_t character_modulus(const GenusTwoCurve& Y, std::uint64_t ell) {
    Integer L = from_u64(ell);
    Integer d = square_part_root(factor(strip(Y.conductor, L)));
    Integer D = Y.conductor % L == 0 ? L * d : d;
    if (!fits_u64(D)) throw invalid_argument("character modulus too large");
    return to_u64(D);
}

std::vector<DirichletCharacter> character_candidates(const GenusTwoCurve& Y, std::uint64_t ell,
                                                     const std::vector<std::uint64_t>& Q) {
    if (ell < 3 || !is_probable_prime(from_u64(ell))) throw invalid_argument("character_candidates: l must be an odd prime");
    std::uint64_t D = character_modulus(Y, ell);
    auto chars = all_characters(D, ell);

    // precompute roots of F_{Y,q} mod l for the usable q
    std::vector<std::pair<std::uint64_t, std::vector<bool>>> roots;
    for (auto q : Q) {
        if (q == ell || D % q == 0) continue;
        if (!Y.is_good(q)) throw bad_reduction(q, Y.label + " has bad reduction at " + std::to_string(q));
        IntPoly F = frobenius_polynomial(Y, q).poly();
        std::vector<bool> is_root(ell, false);
        for (std::uint64_t x = 1; x < ell; ++x) is_root[x] = mod_small(F.eval(from_u64(x)), static_cast<std::int64_t>(ell)) == 0;
        roots.emplace_back(q, std::move(is_root));
    }

    std::vector<DirichletCharacter> out;
    for (auto& chi : chars) {
        bool ok = std::all_of(roots.begin(), roots.end(), [&](auto& qr) { return qr.second[chi(qr.first)]; });
        if (ok) out.push_back(std::move(chi));
    }
    return out;
}

}  // namespace glue
