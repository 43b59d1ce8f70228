#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace glue {

using Integer = mpz_class;

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

// ascending by prime
using Factorization = std::vector<PrimePower>;

bool is_probable_prime(const Integer& n, int rounds = 40);

// trial division up to `limit`; a leftover cofactor must be a probable prime
// or invalid_argument is thrown (no general factoring here)
Factorization factor(const Integer& n, std::uint64_t limit = 10'000'000);

Integer expand(const Factorization& fac);
Integer totient(const Factorization& fac);
unsigned valuation(Integer n, const Integer& p);

// largest d with d^2 | n
Integer square_part_root(const Factorization& fac);

std::uint64_t order_mod(const Integer& a, const Integer& m);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

Integer isqrt(const Integer& n);

inline std::int64_t to_i64(const Integer& z) { return z.get_si(); }
inline std::uint64_t to_u64(const Integer& z) {
    return static_cast<std::uint64_t>(mpz_get_ui(z.get_mpz_t()));
}
bool fits_u64(const Integer& z);
Integer from_u64(std::uint64_t v);

// a mod m in [0, m)
Integer mod(const Integer& a, const Integer& m);
std::int64_t mod_small(const Integer& a, std::int64_t m);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

}  // namespace glue
