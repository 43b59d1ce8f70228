#include "glue/algebra/fq_poly.hpp"

#include <algorithm>

#include "glue/errors.hpp"

namespace glue::fq {

void trim(const ExtensionField& K, Poly& a) {
    while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly constant(const ExtensionField& K, const Fq& c) {
    if (K.is_zero(c)) return {};
    return Poly{c};
}

Poly x_minus(const ExtensionField& K, const Fq& r) { return Poly{K.neg(r), K.one()}; }

Poly add(const ExtensionField& K, const Poly& a, const Poly& b) {
    const Poly& big = a.size() >= b.size() ? a : b;
    const Poly& small = a.size() >= b.size() ? b : a;
    Poly r(big);
    for (std::size_t i = 0; i < small.size(); ++i) r[i] = K.add(r[i], small[i]);
    trim(K, r);
    return r;
}

Poly neg(const ExtensionField& K, const Poly& a) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.neg(a[i]);
    return r;
}

Poly sub(const ExtensionField& K, const Poly& a, const Poly& b) { return add(K, a, neg(K, b)); }

Poly mul(const ExtensionField& K, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    trim(K, r);
    return r;
}

Poly scale(const ExtensionField& K, const Poly& a, const Fq& s) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.mul(a[i], s);
    trim(K, r);
    return r;
}

void divmod(const ExtensionField& K, const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw invalid_argument("fq::divmod by zero");
    r = a;
    trim(K, r);
    int db = degree(b);
    if (degree(r) < db) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, K.zero());
    bool unit_lead = K.is_one(b.back());
    Fq il = unit_lead ? b.back() : K.inv(b.back());
    for (int i = degree(r); i >= db; --i) {
        if (K.is_zero(r[i])) continue;
        Fq c = unit_lead ? r[i] : K.mul(r[i], il);
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] = K.sub(r[i - db + j], K.mul(c, b[j]));
    }
    r.resize(db);
    trim(K, r);
    trim(K, q);
}

Poly rem(const ExtensionField& K, const Poly& a, const Poly& b) {
    if (degree(a) < degree(b)) return a;
    Poly q, r;
    divmod(K, a, b, q, r);
    return r;
}

Poly div_exact(const ExtensionField& K, const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(K, a, b, q, r);
    if (!r.empty()) throw internal_error("fq::div_exact: nonzero remainder");
    return q;
}

Poly monic(const ExtensionField& K, const Poly& a) {
    if (a.empty() || K.is_one(a.back())) return a;
    return scale(K, a, K.inv(a.back()));
}

Poly gcd(const ExtensionField& K, Poly a, Poly b) {
    trim(K, a);
    trim(K, b);
    while (!b.empty()) {
        Poly r = rem(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(K, a);
}

void xgcd(const ExtensionField& K, const Poly& a, const Poly& b, Poly& d, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b;
    trim(K, r0);
    trim(K, r1);
    Poly s0{K.one()}, s1, t0, t1{K.one()};
    while (!r1.empty()) {
        Poly q, r;
        divmod(K, r0, r1, q, r);
        Poly s2 = sub(K, s0, mul(K, q, s1));
        Poly t2 = sub(K, t0, mul(K, q, t1));
        r0 = std::move(r1), r1 = std::move(r);
        s0 = std::move(s1), s1 = std::move(s2);
        t0 = std::move(t1), t1 = std::move(t2);
    }
    if (r0.empty()) {
        d.clear(), s.clear(), t.clear();
        return;
    }
    Fq il = K.inv(r0.back());
    d = scale(K, r0, il);
    s = scale(K, s0, il);
    t = scale(K, t0, il);
}

Fq eval(const ExtensionField& K, const Poly& a, const Fq& x) {
    Fq r = K.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = K.add(K.mul(r, x), *it);
    return r;
}

Poly frobenius(const ExtensionField& K, const Poly& a) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.frobenius(a[i]);
    return r;
}

Poly powmod(const ExtensionField& K, const Poly& base, const Integer& e, const Poly& m) {
    Poly r = rem(K, Poly{K.one()}, m);
    Poly b = rem(K, base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (std::size_t i = bits; i-- > 0;) {
        r = rem(K, mul(K, r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(K, mul(K, r, b), m);
    }
    return r;
}

Fq resultant(const ExtensionField& K, Poly a, Poly b) {
    trim(K, a);
    trim(K, b);
    if (a.empty() || b.empty()) return K.zero();
    Fq res = K.one();
    // Res(a, b) with deg a >= deg b handled by swapping sign bookkeeping
    while (true) {
        int da = degree(a), db = degree(b);
        if (db == 0) return K.mul(res, K.pow(b[0], static_cast<std::uint64_t>(da)));
        if (da == 0) return K.mul(res, K.pow(a[0], static_cast<std::uint64_t>(db)));
        if (da < db) {
            std::swap(a, b);
            if ((da & 1) && (db & 1)) res = K.neg(res);
            continue;
        }
        // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r), r = a mod b
        Poly r = rem(K, a, b);
        if (r.empty()) return K.zero();
        int dr = degree(r);
        if ((da & 1) && (db & 1)) res = K.neg(res);
        res = K.mul(res, K.pow(b.back(), static_cast<std::uint64_t>(da - dr)));
        a = std::move(b);
        b = std::move(r);
    }
}

bool equal(const Poly& a, const Poly& b) { return a == b; }

namespace {

void split(const ExtensionField& K, const Poly& g, std::mt19937_64& rng, std::vector<Fq>& out) {
    int d = degree(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(K.neg(monic(K, g)[0]));
        return;
    }
    Integer half = (K.order() - 1) / 2;
    for (int attempt = 0; attempt < 200; ++attempt) {
        Poly lin{K.random(rng), K.one()};
        Poly w = powmod(K, lin, half, g);
        w = sub(K, w, Poly{K.one()});
        Poly h = gcd(K, g, w);
        if (degree(h) > 0 && degree(h) < d) {
            split(K, h, rng, out);
            split(K, div_exact(K, monic(K, g), h), rng, out);
            return;
        }
    }
    throw internal_error("fq::roots: splitting did not converge");
}

}  // namespace

std::vector<Fq> roots(const ExtensionField& K, const Poly& f_in, std::mt19937_64& rng) {
    if (K.characteristic() == 2) throw invalid_argument("fq::roots: odd characteristic only");
    Poly f = f_in;
    trim(K, f);
    if (f.empty()) throw invalid_argument("fq::roots: zero polynomial");
    f = monic(K, f);
    std::vector<Fq> out;
    if (degree(f) < 1) return out;
    Poly x{K.zero(), K.one()};
    Poly xq = powmod(K, x, K.order(), f);
    Poly g = gcd(K, f, sub(K, xq, x));
    split(K, g, rng, out);
    std::sort(out.begin(), out.end(), [](const Fq& a, const Fq& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

}  // namespace glue::fq
