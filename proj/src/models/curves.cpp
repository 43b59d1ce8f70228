#include "glue/models/curves.hpp"

#include "glue/errors.hpp"

namespace glue {

GenusTwoCurve::GenusTwoCurve(std::string lbl, IntPoly ff, IntPoly hh, const Integer& N)
    : label(std::move(lbl)), f(std::move(ff)), h(std::move(hh)), conductor(N) {
    if (f.degree() > 6) throw invalid_argument(label + ": deg f > 6");
    if (h.degree() > 3) throw invalid_argument(label + ": deg h > 3");
    if (N < 1) throw invalid_argument(label + ": conductor must be positive");
    conductor_factors = factor(N);
    if (discriminant() == 0) throw invalid_argument(label + ": singular model");
    // every prime in the conductor must be bad for the model (the model may be bad at more)
    Integer D = discriminant();
    for (auto& [p, e] : conductor_factors)
        if (!mpz_divisible_p(D.get_mpz_t(), p.get_mpz_t()))
            throw invalid_argument(label + ": conductor prime " + p.get_str() + " does not divide the discriminant");
}

IntPoly GenusTwoCurve::completed() const { return h * h + f * Integer(4); }

Integer GenusTwoCurve::discriminant() const {
    IntPoly F = completed();
    int d = F.degree();
    if (d < 5) return 0;
    Integer disc = glue::discriminant(F);
    if (d == 5) disc *= F.lead() * F.lead();  // binary sextic with vanishing top coefficient
    Integer q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), disc.get_mpz_t(), 4096);
    if (r != 0) return disc;  // not expected for integral models; keep the raw value
    return q;
}

bool GenusTwoCurve::is_good(std::uint64_t p) const {
    return !mpz_divisible_ui_p(conductor.get_mpz_t(), p);
}

unsigned GenusTwoCurve::conductor_valuation(std::uint64_t p) const {
    return valuation(conductor, from_u64(p));
}

const char* to_string(Reduction r) {
    switch (r) {
        case Reduction::good: return "good";
        case Reduction::split_mult: return "split_mult";
        case Reduction::nonsplit_mult: return "nonsplit_mult";
        case Reduction::additive: return "additive";
    }
    return "?";
}

EllipticCurve::EllipticCurve(std::string lbl, std::array<Integer, 5> ai, const Integer& N,
                             std::optional<Integer> dmin)
    : label(std::move(lbl)), a(std::move(ai)), conductor(N), disc_min(std::move(dmin)) {
    if (N < 1) throw invalid_argument(label + ": conductor must be positive");
    Integer D = discriminant();
    if (D == 0) throw invalid_argument(label + ": singular model");
    conductor_factors = factor(N);
    for (auto& [p, e] : conductor_factors)
        if (!mpz_divisible_p(D.get_mpz_t(), p.get_mpz_t()))
            throw invalid_argument(label + ": conductor prime " + p.get_str() + " does not divide the discriminant");
    if (disc_min) {
        // disc(model) = u^12 disc_min
        if (*disc_min == 0 || !mpz_divisible_p(D.get_mpz_t(), disc_min->get_mpz_t()))
            throw invalid_argument(label + ": minimal discriminant does not divide the model discriminant");
        Integer u12 = D / *disc_min, root;
        if (u12 < 0 || !mpz_root(root.get_mpz_t(), u12.get_mpz_t(), 12))
            throw invalid_argument(label + ": discriminant ratio is not a 12th power");
    }
}

Integer EllipticCurve::b2() const { return a[0] * a[0] + 4 * a[1]; }
Integer EllipticCurve::b4() const { return 2 * a[3] + a[0] * a[2]; }
Integer EllipticCurve::b6() const { return a[2] * a[2] + 4 * a[4]; }
Integer EllipticCurve::b8() const {
    return a[0] * a[0] * a[4] + 4 * a[1] * a[4] - a[0] * a[2] * a[3] + a[1] * a[2] * a[2] - a[3] * a[3];
}
Integer EllipticCurve::c4() const { return b2() * b2() - 24 * b4(); }
Integer EllipticCurve::c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
Integer EllipticCurve::discriminant() const {
    Integer B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

unsigned EllipticCurve::conductor_valuation(std::uint64_t p) const {
    return valuation(conductor, from_u64(p));
}

}  // namespace glue
