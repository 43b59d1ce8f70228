#include "glue/algebra/root_split.hpp"

#include "glue/errors.hpp"

namespace glue {

unsigned RootSplit::multiplicity(std::uint64_t r) const {
    for (auto& [x, m] : roots)
        if (x == r) return m;
    return 0;
}

unsigned RootSplit::root_count() const {
    unsigned n = 0;
    for (auto& [x, m] : roots) n += m;
    return n;
}

RootSplit split_roots_mod(const IntPoly& F, std::uint64_t ell) {
    PrimeField K(ell);
    fp::Poly f = F.mod_u64(ell);
    fp::trim(f);
    if (f.empty()) throw invalid_argument("split_roots_mod: polynomial vanishes mod l");
    f = fp::monic(K, f);
    RootSplit out;
    for (std::uint64_t r = 0; r < ell; ++r) {
        unsigned m = 0;
        while (fp::degree(f) >= 1 && fp::eval(K, f, r) == 0) {
            fp::Poly q, rem;
            fp::divmod(K, f, fp::Poly{K.neg(r), 1}, q, rem);
            f = std::move(q);
            ++m;
        }
        if (m) out.roots.emplace_back(r, m);
    }
    out.cofactor = f;
    return out;
}

RootSplit factor_quartic_mod_ell(const IntPoly& F, std::uint64_t ell) {
    if (F.degree() != 4) throw invalid_argument("factor_quartic_mod_ell: degree must be 4");
    if (ell < 3 || !is_probable_prime(from_u64(ell))) throw invalid_argument("factor_quartic_mod_ell: l must be an odd prime");
    return split_roots_mod(F, ell);
}

}  // namespace glue
