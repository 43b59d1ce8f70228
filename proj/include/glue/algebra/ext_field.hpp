#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "glue/algebra/fp_poly.hpp"
#include "glue/algebra/integer.hpp"
#include "glue/algebra/prime_field.hpp"

namespace glue {

// element of F_{p^k}: exactly k residues, ascending powers of the generator
using Fq = std::vector<std::uint64_t>;

// F_p[t]/(m(t)) with m the lexicographically least monic irreducible of
// degree k, ordering candidates by the base-p integer sum c_i p^i
class ExtensionField {
public:
    ExtensionField(const PrimeField& base, unsigned degree);
    ExtensionField(const PrimeField& base, fp::Poly modulus);  // caller-chosen irreducible

    const PrimeField& base() const { return base_; }
    std::uint64_t characteristic() const { return base_.p(); }
    unsigned degree() const { return k_; }
    const fp::Poly& modulus() const { return mod_; }
    const Integer& order() const { return q_; }

    Fq zero() const { return Fq(k_, 0); }
    Fq one() const { return from_base(1); }
    Fq from_base(std::uint64_t a) const;
    Fq from_int(std::int64_t a) const { return from_base(base_.reduce_signed(a)); }
    Fq gen() const;  // the class of t

    bool is_zero(const Fq& a) const;
    bool is_one(const Fq& a) const;
    // a lies in the prime field
    bool in_base(const Fq& a) const;

    Fq add(const Fq& a, const Fq& b) const;
    Fq sub(const Fq& a, const Fq& b) const;
    Fq neg(const Fq& a) const;
    Fq mul(const Fq& a, const Fq& b) const;
    Fq sqr(const Fq& a) const { return mul(a, a); }
    Fq scale(const Fq& a, std::uint64_t s) const;
    Fq inv(const Fq& a) const;
    Fq div(const Fq& a, const Fq& b) const { return mul(a, inv(b)); }
    Fq pow(const Fq& a, const Integer& e) const;
    Fq pow(const Fq& a, std::uint64_t e) const { return pow(a, from_u64(e)); }

    // a^p, linear over F_p so done with a precomputed table
    Fq frobenius(const Fq& a) const;

    bool is_square(const Fq& a) const;
    std::optional<Fq> sqrt(const Fq& a) const;

    Fq random(std::mt19937_64& rng) const;

    std::string str(const Fq& a) const;

private:
    void setup();

    PrimeField base_;
    unsigned k_;
    fp::Poly mod_;
    Integer q_;
    std::vector<Fq> frob_;  // t^{i p}
    // Tonelli-Shanks data, odd p only
    unsigned ts_s_ = 0;
    Integer ts_t_;
    Fq ts_z_;  // nonresidue^t
};

}  // namespace glue
