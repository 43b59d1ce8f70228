#include "glue/algebra/prime_field.hpp"

#include "glue/errors.hpp"

namespace glue {

PrimeField::PrimeField(const Integer& p) {
    if (!is_probable_prime(p, 40)) throw invalid_argument("PrimeField: " + p.get_str() + " is not prime");
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 63) throw invalid_argument("PrimeField: characteristic too large");
    p_ = to_u64(p);
}

std::uint64_t PrimeField::reduce(const Integer& a) const { return to_u64(mod(a, from_u64(p_))); }

std::uint64_t PrimeField::reduce_signed(std::int64_t a) const {
    __int128 r = static_cast<__int128>(a) % static_cast<__int128>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint64_t>(r);
}

int PrimeField::legendre(std::uint64_t a) const {
    a %= p_;
    if (a == 0) return 0;
    if (p_ == 2) return 1;
    return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

std::optional<std::uint64_t> PrimeField::sqrt(std::uint64_t a) const {
    a %= p_;
    if (a == 0 || p_ == 2) return a;
    if (legendre(a) != 1) return std::nullopt;
    // Tonelli-Shanks
    std::uint64_t q = p_ - 1, s = 0;
    while (!(q & 1)) q >>= 1, ++s;
    std::uint64_t z = 2;
    while (legendre(z) != -1) ++z;
    std::uint64_t m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) tt = mul(tt, tt), ++i;
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

}  // namespace glue
