#include "glue/jacobian/jacobian.hpp"

#include <numeric>

#include "glue/algebra/fp_poly.hpp"
#include "glue/errors.hpp"

namespace glue {

using fq::Poly;

std::size_t MumfordHash::operator()(const MumfordDivisor& d) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&](std::uint64_t x) { h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    for (auto& c : d.u)
        for (auto x : c) mix(x);
    mix(0xfeed);
    for (auto& c : d.v)
        for (auto x : c) mix(x);
    return h;
}

HyperellipticJacobian::HyperellipticJacobian(std::shared_ptr<const ExtensionField> K, Poly G)
    : K_(std::move(K)), G_(std::move(G)) {
    fq::trim(*K_, G_);
    int d = fq::degree(G_);
    if (d != 3 && d != 5) throw invalid_argument("HyperellipticJacobian: need deg G = 3 or 5");
    if (K_->characteristic() == 2) throw invalid_argument("HyperellipticJacobian: odd characteristic only");
    g_ = static_cast<unsigned>(d / 2);
    Poly dG(G_.size() - 1);
    for (std::size_t i = 1; i < G_.size(); ++i) dG[i - 1] = K_->scale(G_[i], i % K_->characteristic());
    fq::trim(*K_, dG);
    if (fq::degree(fq::gcd(*K_, G_, dG)) > 0) throw invalid_argument("HyperellipticJacobian: G has a repeated root");
}

MumfordDivisor HyperellipticJacobian::identity() const { return {Poly{K_->one()}, Poly{}}; }

bool HyperellipticJacobian::is_valid(const MumfordDivisor& D) const {
    const auto& K = *K_;
    int du = fq::degree(D.u);
    if (du < 0 || du > static_cast<int>(g_) || !K.is_one(D.u.back())) return false;
    if (fq::degree(D.v) >= du) return false;
    Poly r = fq::rem(K, fq::sub(K, fq::mul(K, D.v, D.v), G_), D.u);
    return r.empty();
}

MumfordDivisor HyperellipticJacobian::neg(const MumfordDivisor& D) const { return {D.u, fq::neg(*K_, D.v)}; }

MumfordDivisor HyperellipticJacobian::reduce(Poly u, Poly v, MillerFunction* h) const {
    const auto& K = *K_;
    v = fq::rem(K, v, u);
    while (fq::degree(u) > static_cast<int>(g_)) {
        Poly un = fq::div_exact(K, fq::sub(K, G_, fq::mul(K, v, v)), u);
        if (h) {
            h->lines.push_back(v);
            h->x_den.push_back(un);
        }
        u = fq::monic(K, un);
        v = fq::rem(K, fq::neg(K, v), u);
    }
    if (fq::degree(u) == 0) return identity();
    return {std::move(u), std::move(v)};
}

MumfordDivisor HyperellipticJacobian::add(const MumfordDivisor& a, const MumfordDivisor& b) const {
    return add(a, b, nullptr);
}

MumfordDivisor HyperellipticJacobian::add(const MumfordDivisor& a, const MumfordDivisor& b, MillerFunction* h) const {
    const auto& K = *K_;
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;
    Poly d0, e1, e2;
    fq::xgcd(K, a.u, b.u, d0, e1, e2);
    Poly d, s1, s2, s3;
    if (fq::degree(d0) == 0) {
        d = d0;
        s1 = e1;
        s2 = e2;
    } else {
        Poly c1, c2;
        fq::xgcd(K, d0, fq::add(K, a.v, b.v), d, c1, c2);
        s1 = fq::mul(K, c1, e1);
        s2 = fq::mul(K, c1, e2);
        s3 = c2;
    }
    Poly u = fq::div_exact(K, fq::mul(K, a.u, b.u), fq::mul(K, d, d));
    Poly t = fq::add(K, fq::mul(K, s1, fq::mul(K, a.u, b.v)), fq::mul(K, s2, fq::mul(K, b.u, a.v)));
    if (!s3.empty()) t = fq::add(K, t, fq::mul(K, s3, fq::add(K, fq::mul(K, a.v, b.v), G_)));
    Poly v = fq::div_exact(K, t, d);
    if (h && fq::degree(d) > 0) h->x_num.push_back(d);
    return reduce(std::move(u), std::move(v), h);
}

MumfordDivisor HyperellipticJacobian::mul(const Integer& n, const MumfordDivisor& D) const {
    if (n < 0) return mul(Integer(-n), neg(D));
    MumfordDivisor r = identity();
    for (long i = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        r = add(r, r);
        if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = add(r, D);
    }
    return r;
}

std::optional<MumfordDivisor> HyperellipticJacobian::point(const Fq& x, bool other_root) const {
    const auto& K = *K_;
    auto y = K.sqrt(fq::eval(K, G_, x));
    if (!y) return std::nullopt;
    Fq yy = other_root ? K.neg(*y) : *y;
    return MumfordDivisor{fq::x_minus(K, x), fq::constant(K, yy)};
}

MumfordDivisor HyperellipticJacobian::random_point(std::mt19937_64& rng) const {
    for (;;) {
        Fq x = K_->random(rng);
        bool flip = rng() & 1;
        if (auto P = point(x, flip)) return *P;
    }
}

MumfordDivisor HyperellipticJacobian::random(std::mt19937_64& rng) const {
    MumfordDivisor D = random_point(rng);
    for (unsigned i = 1; i < g_; ++i) D = add(D, random_point(rng));
    return D;
}

void HyperellipticJacobian::set_twist(const Fq& delta) {
    const auto& K = *K_;
    if (K.is_zero(delta)) {
        twisted_ = false;
        return;
    }
    twisted_ = true;
    delta_ = delta;
    Fq w = K.inv(delta);
    if (!K.is_zero(fq::eval(K, G_, w))) throw internal_error("set_twist: 1/delta is not a Weierstrass abscissa");
    frob_inf_ = {fq::x_minus(K, w), Poly{}};
}

MumfordDivisor HyperellipticJacobian::frobenius(const MumfordDivisor& D) const {
    const auto& K = *K_;
    Poly us = fq::frobenius(K, D.u), vs = fq::frobenius(K, D.v);
    if (!twisted_) return {std::move(us), std::move(vs)};

    // (X, Y) -> (X^p / (delta X^p + 1), Y^p / (delta X^p + 1)^{g+1}); with T the new
    // abscissa, X^p = T / (1 - delta T)
    const int d = fq::degree(D.u);
    const Poly one_minus{K.one(), K.neg(delta_)};
    std::vector<Poly> pw{Poly{K.one()}};
    for (unsigned i = 0; i <= g_ + 1; ++i) pw.push_back(fq::mul(K, pw.back(), one_minus));
    // sum_j a_j T^j (1 - delta T)^{top - j}
    auto homogenize = [&](const Poly& a, int top) {
        Poly r;
        for (int j = 0; j < static_cast<int>(a.size()); ++j) {
            Poly term = pw[top - j];
            term.insert(term.begin(), j, K.zero());
            r = fq::add(K, r, fq::scale(K, term, a[j]));
        }
        return r;
    };
    Poly un = homogenize(us, d);
    Poly vn = homogenize(vs, static_cast<int>(g_) + 1);
    MumfordDivisor out = identity();
    if (fq::degree(un) > 0) {
        un = fq::monic(K, un);
        out = {un, fq::rem(K, vn, un)};
    }
    if (d % 2 == 1) out = add(out, frob_inf_);
    return out;
}

MumfordDivisor HyperellipticJacobian::frobenius(const MumfordDivisor& D, unsigned k) const {
    MumfordDivisor r = D;
    for (unsigned i = 0; i < k; ++i) r = frobenius(r);
    return r;
}

namespace {

fp::Poly reduce_mod(const IntPoly& F, const PrimeField& Fp) {
    fp::Poly r;
    for (auto& c : F.coeffs()) r.push_back(Fp.reduce(c));
    fp::trim(r);
    return r;
}

Poly lift(const ExtensionField& K, const fp::Poly& a) {
    Poly r;
    for (auto c : a) r.push_back(K.from_base(c));
    fq::trim(K, r);
    return r;
}

}  // namespace

unsigned working_degree(const GenusTwoCurve& Y, std::uint64_t p, unsigned n) {
    PrimeField Fp(p);
    fp::Poly F = reduce_mod(Y.completed(), Fp);
    if (fp::degree(F) == 5) return n;
    if (fp::degree(F) != 6) throw bad_reduction(p, Y.label + ": model degenerates mod " + std::to_string(p));
    // least m with a root in F_{p^m}: gcd(F, x^{p^m} - x) nontrivial
    fp::Poly x{0, 1}, xp = x;
    for (unsigned m = 1; m <= 6; ++m) {
        xp = fp::powmod(Fp, xp, from_u64(p), F);
        if (fp::degree(fp::gcd(Fp, F, fp::sub(Fp, xp, x))) > 0) return std::lcm(n, m);
    }
    throw internal_error("working_degree: sextic without roots in degree <= 6");
}

HyperellipticJacobian jacobian_of(const GenusTwoCurve& Y, std::shared_ptr<const ExtensionField> Kp) {
    const auto& K = *Kp;
    const std::uint64_t p = K.characteristic();
    if (!Y.is_good(p)) throw bad_reduction(p, Y.label + " has bad reduction at " + std::to_string(p));
    fp::Poly F = reduce_mod(Y.completed(), K.base());
    if (fp::degree(F) == 5) return HyperellipticJacobian(Kp, lift(K, F));
    if (fp::degree(F) != 6) throw bad_reduction(p, Y.label + ": model degenerates mod " + std::to_string(p));

    Poly FK = lift(K, F);
    std::mt19937_64 rng(0x5eed);
    auto rs = fq::roots(K, FK, rng);
    if (rs.empty()) throw invalid_argument("jacobian_of: working field contains no Weierstrass point; see working_degree");
    Fq r = rs.front();
    for (auto& c : rs)
        if (K.in_base(c)) {
            r = c;
            break;
        }
    // G(X) = X^6 F(r + 1/X) = sum F_i (1 + r X)^i X^{6-i}
    Poly G;
    Poly lin{K.one(), r};
    Poly linp{K.one()};
    for (int i = 0; i <= 6; ++i) {
        Poly term = linp;
        term.insert(term.begin(), 6 - i, K.zero());
        G = fq::add(K, G, fq::scale(K, term, FK[i]));
        linp = fq::mul(K, linp, lin);
    }
    HyperellipticJacobian J(Kp, G);
    J.set_twist(K.sub(K.frobenius(r), r));
    return J;
}

HyperellipticJacobian jacobian_of(const EllipticCurve& X, std::shared_ptr<const ExtensionField> Kp) {
    const auto& K = *Kp;
    const auto& Fp = K.base();
    Poly G{K.from_base(Fp.reduce(X.b6())), K.from_base(Fp.reduce(2 * X.b4())), K.from_base(Fp.reduce(X.b2())),
           K.from_base(Fp.reduce(Integer(4)))};
    return HyperellipticJacobian(Kp, G);
}

EcPoint to_ec_point(const EllipticCurve& X, const HyperellipticJacobian& E, const MumfordDivisor& D) {
    if (E.genus() != 1) throw invalid_argument("to_ec_point: genus-1 Jacobian expected");
    if (D.is_identity()) return {};
    const auto& K = E.field();
    const auto& Fp = K.base();
    Fq x = K.neg(D.u[0]);
    Fq yp = D.v.empty() ? K.zero() : D.v[0];
    Fq t = K.add(K.mul(K.from_base(Fp.reduce(X.a[0])), x), K.from_base(Fp.reduce(X.a[2])));
    Fq y = K.mul(K.sub(yp, t), K.from_base(Fp.inv(2)));
    return {false, x, y};
}

MumfordDivisor from_ec_point(const EllipticCurve& X, const HyperellipticJacobian& E, const EcPoint& P) {
    if (P.infinity) return E.identity();
    const auto& K = E.field();
    const auto& Fp = K.base();
    Fq t = K.add(K.mul(K.from_base(Fp.reduce(X.a[0])), P.x), K.from_base(Fp.reduce(X.a[2])));
    Fq yp = K.add(K.add(P.y, P.y), t);
    return {fq::x_minus(K, P.x), fq::constant(K, yp)};
}

}  // namespace glue
