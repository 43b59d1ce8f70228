#include "glue/algebra/fp_poly.hpp"

#include <algorithm>

#include "glue/errors.hpp"

namespace glue::fp {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

Poly sub(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

Poly mul(const PrimeField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

Poly scale(const PrimeField& F, const Poly& a, std::uint64_t s) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], s);
    trim(r);
    return r;
}

void divmod(const PrimeField& F, const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw invalid_argument("fp::divmod by zero");
    r = a;
    trim(r);
    int db = degree(b);
    if (degree(r) < db) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, 0);
    std::uint64_t il = F.inv(b.back());
    for (int i = degree(r); i >= db; --i) {
        std::uint64_t c = F.mul(r[i], il);
        q[i - db] = c;
        if (!c) continue;
        for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
    }
    r.resize(db);
    trim(r);
    trim(q);
}

Poly rem(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(F, a, b, q, r);
    return r;
}

Poly monic(const PrimeField& F, const Poly& a) {
    if (a.empty()) return a;
    return scale(F, a, F.inv(a.back()));
}

Poly gcd(const PrimeField& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

Poly powmod(const PrimeField& F, Poly base, const Integer& e, const Poly& m) {
    Poly r{1};
    r = rem(F, r, m);
    base = rem(F, base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = rem(F, mul(F, r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(F, mul(F, r, base), m);
    }
    return r;
}

std::uint64_t eval(const PrimeField& F, const Poly& a, std::uint64_t x) {
    std::uint64_t r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = F.add(F.mul(r, x), *it);
    return r;
}

bool is_irreducible(const PrimeField& F, const Poly& m) {
    int k = degree(m);
    if (k < 1) return false;
    if (k == 1) return true;
    Poly x{0, 1};
    Poly xp = x;
    Integer p = from_u64(F.p());
    for (int i = 1; i <= k / 2; ++i) {
        xp = powmod(F, xp, p, m);  // x^{p^i}
        Poly g = gcd(F, sub(F, xp, x), m);
        if (degree(g) > 0) return false;
    }
    return true;
}

}  // namespace glue::fp
