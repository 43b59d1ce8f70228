#include "glue/jacobian/torsion.hpp"

#include <algorithm>
#include <numeric>

#include "glue/errors.hpp"

namespace glue {

IntPoly elliptic_charpoly(std::int64_t a, std::uint64_t p) {
    return IntPoly(std::vector<Integer>{from_u64(p), Integer(static_cast<long>(-a)), Integer(1)});
}

Integer jac_order(const IntPoly& P, unsigned n) {
    if (n == 0) throw invalid_argument("jac_order: n >= 1");
    std::vector<Integer> c(n + 1, Integer(0));
    c[0] = -1;
    c[n] = 1;
    return abs(resultant(P, IntPoly(c)));
}

Integer jac_order(const FrobeniusData& F, unsigned n) { return jac_order(F.poly(), n); }

std::vector<std::uint64_t> reduce_poly_mod(const IntPoly& P, std::uint64_t ell) {
    std::vector<std::uint64_t> r;
    for (auto& c : P.coeffs()) r.push_back(static_cast<std::uint64_t>(mod_small(c, static_cast<std::int64_t>(ell))));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::uint64_t torsion_field_degree(const IntPoly& charpoly, std::uint64_t ell) {
    PrimeField F(ell);
    fp::Poly m = reduce_poly_mod(charpoly, ell);
    if (fp::degree(m) < 1 || m[0] == 0) throw invalid_argument("torsion_field_degree: T divides the charpoly mod l");
    fp::Poly x{0, 1}, t = fp::rem(F, x, m);
    for (std::uint64_t k = 1; k <= 10'000'000; ++k) {
        if (t == fp::Poly{1}) return k;
        t = fp::rem(F, fp::mul(F, t, x), m);
    }
    throw internal_error("torsion_field_degree: order not found");
}

std::optional<MumfordDivisor> sample_l_torsion(const HyperellipticJacobian& J, const Integer& N, std::uint64_t ell,
                                               std::mt19937_64& rng) {
    Integer L = from_u64(ell);
    if (N % L != 0) throw invalid_argument("sample_l_torsion: l does not divide the group order");
    Integer m = N;
    while (m % L == 0) m /= L;
    MumfordDivisor z = J.mul(m, J.random(rng));
    if (z.is_identity()) return std::nullopt;
    for (;;) {
        MumfordDivisor next = J.mul(L, z);
        if (next.is_identity()) return z;
        z = std::move(next);
    }
}

std::optional<std::vector<std::uint64_t>> TorsionBasis::coordinates(const MumfordDivisor& D) const {
    auto it = span_.find(D);
    if (it == span_.end()) return std::nullopt;
    return it->second;
}

MumfordDivisor TorsionBasis::combination(const HyperellipticJacobian& J, const std::vector<std::uint64_t>& c) const {
    MumfordDivisor r = J.identity();
    for (std::size_t i = 0; i < gens_.size(); ++i) r = J.add(r, J.mul(from_u64(c[i] % ell_), gens_[i]));
    return r;
}

void TorsionBasis::extend(const HyperellipticJacobian& J, const MumfordDivisor& b) {
    if (span_.empty()) span_.emplace(J.identity(), std::vector<std::uint64_t>{});
    std::vector<std::pair<MumfordDivisor, std::vector<std::uint64_t>>> old(span_.begin(), span_.end());
    span_.clear();
    for (auto& [D, c] : old) {
        MumfordDivisor cur = D;
        for (std::uint64_t k = 0; k < ell_; ++k) {
            auto cc = c;
            cc.push_back(k);
            span_.emplace(cur, std::move(cc));
            cur = J.add(cur, b);
        }
    }
    gens_.push_back(b);
}

void TorsionBasis::replace(std::size_t i, const MumfordDivisor& y, const std::vector<std::uint64_t>& c) {
    // x = sum a_j b_j, b_i = (y - sum_{j != i} c_j b_j) / c_i
    std::uint64_t inv = invmod(c[i], ell_);
    for (auto& [D, a] : span_) {
        std::uint64_t ai = mulmod(a[i], inv, ell_);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != i) a[j] = (a[j] + ell_ - mulmod(ai, c[j], ell_)) % ell_;
        a[i] = ai;
    }
    gens_[i] = y;
}

TorsionBasis torsion_basis(const HyperellipticJacobian& J, const Integer& N, std::uint64_t ell, std::mt19937_64& rng,
                           unsigned rank) {
    if (rank == 0) rank = 2 * J.genus();
    Integer L = from_u64(ell);
    if (N % L != 0) throw invalid_argument("torsion_basis: l does not divide the group order");
    Integer m = N;
    while (m % L == 0) m /= L;

    TorsionBasis B;
    B.ell_ = ell;
    B.span_.emplace(J.identity(), std::vector<std::uint64_t>{});
    std::vector<MumfordDivisor> lift;
    std::vector<unsigned> height;

    const unsigned budget = 40 + 16 * rank * static_cast<unsigned>(ell);
    for (unsigned s = 0; s < budget && B.rank() < rank; ++s) {
        MumfordDivisor z = J.mul(m, J.random(rng));
        for (;;) {
            // j = exact height of z, y = l^{j-1} z
            unsigned j = 0;
            MumfordDivisor y = z, w = z;
            while (!w.is_identity()) {
                y = w;
                w = J.mul(L, w);
                ++j;
            }
            if (j == 0) break;
            auto c = B.coordinates(y);
            if (!c) {
                B.extend(J, y);
                lift.push_back(z);
                height.push_back(j);
                break;
            }
            std::size_t swap = c->size();
            for (std::size_t i = 0; i < c->size(); ++i)
                if ((*c)[i] != 0 && height[i] < j) swap = i;
            if (swap < c->size()) {
                B.replace(swap, y, *c);
                lift[swap] = z;
                height[swap] = j;
                break;
            }
            // every used generator sits at least as deep: subtract, the height drops
            for (std::size_t i = 0; i < c->size(); ++i) {
                if ((*c)[i] == 0) continue;
                Integer k = from_u64((*c)[i]);
                for (unsigned e = j; e < height[i]; ++e) k *= L;
                z = J.sub(z, J.mul(k, lift[i]));
            }
        }
    }
    if (B.rank() < rank)
        throw basis_error("torsion_basis: reached rank " + std::to_string(B.rank()) + " of " + std::to_string(rank));
    return B;
}

Matrix frobenius_matrix(const HyperellipticJacobian& J, const TorsionBasis& basis) {
    const std::size_t n = basis.rank();
    Matrix M(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        auto c = basis.coordinates(J.frobenius(basis.generators()[j]));
        if (!c) throw basis_error("frobenius_matrix: Frobenius image outside the span of the basis");
        for (std::size_t i = 0; i < n; ++i) M[i][j] = (*c)[i];
    }
    return M;
}

std::vector<std::uint64_t> charpoly_mod(const Matrix& M, std::uint64_t ell) {
    // Laplace expansion of det(T I - M) with polynomial entries; n <= 4
    const std::size_t n = M.size();
    PrimeField F(ell);
    using P = fp::Poly;
    std::vector<std::vector<P>> A(n, std::vector<P>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            P e{F.neg(M[i][j] % ell)};
            if (i == j) e.push_back(1);
            fp::trim(e);
            A[i][j] = e;
        }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    P det;
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        P term{1};
        for (std::size_t i = 0; i < n; ++i) term = fp::mul(F, term, A[i][perm[i]]);
        det = inversions % 2 ? fp::sub(F, det, term) : fp::add(F, det, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Matrix mat_mul(const Matrix& A, const Matrix& B, std::uint64_t ell) {
    const std::size_t n = A.size();
    Matrix C(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) C[i][j] = (C[i][j] + A[i][k] * B[k][j]) % ell;
    return C;
}

std::uint64_t matrix_order(const Matrix& M, std::uint64_t ell) {
    const std::size_t n = M.size();
    Matrix I(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    Matrix P = M;
    for (std::uint64_t k = 1; k <= 1'000'000; ++k) {
        if (P == I) return k;
        P = mat_mul(P, M, ell);
    }
    throw invalid_argument("matrix_order: matrix is not invertible");
}

}  // namespace glue
