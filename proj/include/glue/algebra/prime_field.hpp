#pragma once

#include <cstdint>
#include <optional>

#include "glue/algebra/integer.hpp"

namespace glue {

// F_p with p < 2^63; elements are plain residues in [0, p)
class PrimeField {
public:
    explicit PrimeField(const Integer& p);
    explicit PrimeField(std::uint64_t p) : PrimeField(from_u64(p)) {}

    std::uint64_t p() const { return p_; }

    std::uint64_t reduce(const Integer& a) const;
    std::uint64_t reduce_signed(std::int64_t a) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a ? p_ - a : 0; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, p_); }
    std::uint64_t inv(std::uint64_t a) const { return invmod(a, p_); }

    // Legendre symbol in {-1, 0, 1}
    int legendre(std::uint64_t a) const;
    std::optional<std::uint64_t> sqrt(std::uint64_t a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

}  // namespace glue
