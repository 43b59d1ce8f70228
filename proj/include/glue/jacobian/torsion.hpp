#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "glue/algebra/int_poly.hpp"
#include "glue/jacobian/jacobian.hpp"
#include "glue/models/point_count.hpp"

namespace glue {

// square matrix over F_l, row-major
using Matrix = std::vector<std::vector<std::uint64_t>>;

// T^2 - a T + p
IntPoly elliptic_charpoly(std::int64_t a, std::uint64_t p);
// |Res(P, T^n - 1)|: the group order over F_{p^n} when P is the Frobenius charpoly
Integer jac_order(const IntPoly& charpoly, unsigned n);
Integer jac_order(const FrobeniusData& F, unsigned n);

// order of T in F_l[T]/(P mod l); the l-torsion is rational over F_{p^k} for this k
std::uint64_t torsion_field_degree(const IntPoly& charpoly, std::uint64_t ell);

// group_order = l^v m, l not dividing m: multiply a random element by m, then by l
// until the next step would vanish. nullopt when m x is already the identity.
std::optional<MumfordDivisor> sample_l_torsion(const HyperellipticJacobian& J, const Integer& group_order,
                                               std::uint64_t ell, std::mt19937_64& rng);

// basis of J[l] with an exhaustive coordinate table (l^rank entries)
class TorsionBasis {
public:
    std::uint64_t ell() const { return ell_; }
    std::size_t rank() const { return gens_.size(); }
    const std::vector<MumfordDivisor>& generators() const { return gens_; }
    std::optional<std::vector<std::uint64_t>> coordinates(const MumfordDivisor& D) const;
    MumfordDivisor combination(const HyperellipticJacobian& J, const std::vector<std::uint64_t>& c) const;

private:
    friend TorsionBasis torsion_basis(const HyperellipticJacobian&, const Integer&, std::uint64_t, std::mt19937_64&,
                                      unsigned);
    void extend(const HyperellipticJacobian& J, const MumfordDivisor& b);
    void replace(std::size_t i, const MumfordDivisor& y, const std::vector<std::uint64_t>& c);

    std::uint64_t ell_ = 0;
    std::vector<MumfordDivisor> gens_;
    std::unordered_map<MumfordDivisor, std::vector<std::uint64_t>, MumfordHash> span_;
};

// Samples from the l-Sylow subgroup and keeps, per basis vector b_i, a lift w_i of
// maximal height h_i (l^{h_i - 1} w_i = b_i); new samples are reduced against the
// lifts so deep cyclic factors do not hide the shallow ones. Throws basis_error if
// the requested rank (default 2g) is not reached.
TorsionBasis torsion_basis(const HyperellipticJacobian& J, const Integer& group_order, std::uint64_t ell,
                           std::mt19937_64& rng, unsigned rank = 0);

// column j = coordinates of Frob(b_j)
Matrix frobenius_matrix(const HyperellipticJacobian& J, const TorsionBasis& basis);

// det(T I - M) mod l, ascending, monic
std::vector<std::uint64_t> charpoly_mod(const Matrix& M, std::uint64_t ell);
std::vector<std::uint64_t> reduce_poly_mod(const IntPoly& P, std::uint64_t ell);
Matrix mat_mul(const Matrix& A, const Matrix& B, std::uint64_t ell);
// multiplicative order in GL_n(F_l)
std::uint64_t matrix_order(const Matrix& M, std::uint64_t ell);

}  // namespace glue
