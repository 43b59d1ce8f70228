#include "glue/algebra/integer.hpp"

#include <numeric>

#include "glue/errors.hpp"

namespace glue {

bool is_probable_prime(const Integer& n, int rounds) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), rounds) != 0;
}

Factorization factor(const Integer& n_in, std::uint64_t limit) {
    if (n_in <= 0) throw invalid_argument("factor: n must be positive");
    Factorization out;
    Integer n = n_in;
    auto pull = [&](std::uint64_t p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) out.push_back({from_u64(p), e});
    };
    pull(2);
    pull(3);
    // 6k +- 1 wheel
    for (std::uint64_t p = 5; p <= limit; p += 6) {
        if (n == 1) break;
        Integer pp = from_u64(p);
        if (pp * pp > n) break;
        pull(p);
        pull(p + 2);
    }
    if (n > 1) {
        if (!is_probable_prime(n))
            throw invalid_argument("factor: composite cofactor beyond trial-division limit: " +
                                   n.get_str());
        out.push_back({n, 1});
    }
    return out;
}

Integer expand(const Factorization& fac) {
    Integer r = 1;
    for (auto& [p, e] : fac) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), e);
        r *= t;
    }
    return r;
}

Integer totient(const Factorization& fac) {
    Integer r = 1;
    for (auto& [p, e] : fac) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), e - 1);
        r *= t * (p - 1);
    }
    return r;
}

unsigned valuation(Integer n, const Integer& p) {
    if (n == 0) throw invalid_argument("valuation of zero");
    if (p < 2) throw invalid_argument("valuation: base must be >= 2");
    if (n < 0) n = -n;
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

Integer square_part_root(const Factorization& fac) {
    Integer d = 1;
    for (auto& [p, e] : fac) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), e / 2);
        d *= t;
    }
    return d;
}

std::uint64_t order_mod(const Integer& a, const Integer& m) {
    if (m < 1) throw invalid_argument("order_mod: modulus must be >= 1");
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw invalid_argument("order_mod: gcd(a, m) != 1");
    if (m == 1) return 1;
    // the order divides phi(m); strip prime factors of phi(m) while a^k stays 1
    Integer phi = totient(factor(m));
    Integer am = mod(a, m);
    Integer k = phi;
    for (auto& [q, e] : factor(phi)) {
        for (unsigned i = 0; i < e; ++i) {
            Integer cand = k / q;
            Integer r;
            mpz_powm(r.get_mpz_t(), am.get_mpz_t(), cand.get_mpz_t(), m.get_mpz_t());
            if (r != 1) break;
            k = cand;
        }
    }
    if (!fits_u64(k)) throw internal_error("order_mod: order exceeds 64 bits");
    return to_u64(k);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw invalid_argument("isqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool fits_u64(const Integer& z) {
    return z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

Integer from_u64(std::uint64_t v) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::int64_t mod_small(const Integer& a, std::int64_t m) {
    return static_cast<std::int64_t>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m)));
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid on signed 128-bit to dodge overflow
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr) {
        __int128 q = r / nr;
        std::swap(t, nt), nt -= q * t;
        std::swap(r, nr), nr -= q * r;
    }
    if (r != 1) throw invalid_argument("invmod: not invertible");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

}  // namespace glue
