#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "glue/algebra/integer.hpp"

namespace glue {

// dense polynomial over Z, ascending coefficients, no trailing zeros
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::vector<Integer> c);
    IntPoly(std::initializer_list<long> c);
    static IntPoly monomial(unsigned deg, const Integer& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    Integer lead() const { return c_.empty() ? Integer(0) : c_.back(); }

    Integer eval(const Integer& x) const;
    Integer content() const;
    IntPoly primitive() const;
    IntPoly derivative() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Integer& s) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    // reduce coefficients mod m into [0, m)
    std::vector<std::uint64_t> mod_u64(std::uint64_t m) const;

    std::string str(char var = 'T') const;

private:
    void trim();
    std::vector<Integer> c_;
};

// Res(f, g), subresultant PRS; sign is the Sylvester-determinant one
Integer resultant(const IntPoly& f, const IntPoly& g);

// gcd over Q made primitive with positive leading coefficient
IntPoly gcd(const IntPoly& f, const IntPoly& g);

// lc^{delta+1} a = q b + r
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)
Integer discriminant(const IntPoly& f);

}  // namespace glue
