#include "glue/algebra/unit_group.hpp"

#include "glue/errors.hpp"

namespace glue {

namespace {

std::uint64_t primitive_root_prime_power(std::uint64_t p, unsigned e, std::uint64_t pe) {
    std::uint64_t phi_p = p - 1;
    auto fac = factor(from_u64(phi_p));
    std::uint64_t g = 2;
    for (;; ++g) {
        bool ok = true;
        for (auto& [q, _] : fac)
            if (powmod(g, phi_p / to_u64(q), p) == 1) ok = false;
        if (ok) break;
    }
    if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
    return g % pe;
}

}  // namespace

UnitGroup unit_group(std::uint64_t m) {
    if (m == 0) throw invalid_argument("unit_group: modulus must be >= 1");
    UnitGroup G;
    G.modulus = m;
    if (m == 1) return G;
    auto fac = factor(from_u64(m));
    for (auto& [P, e] : fac) {
        std::uint64_t p = to_u64(P);
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        std::uint64_t rest = m / pe;
        // CRT lift: x = a mod pe, 1 mod rest
        auto lift = [&](std::uint64_t a) -> std::uint64_t {
            if (rest == 1) return a % pe;
            std::uint64_t inv_rest = invmod(rest % pe, pe);
            // x = 1 + rest * ((a - 1) * inv_rest mod pe)
            std::uint64_t t = mulmod((a + pe - 1) % pe, inv_rest, pe);
            return (1 + rest * t) % m;
        };
        UnitGroup::Local loc{pe, {}, {}};
        auto push = [&](std::uint64_t local_gen, std::uint64_t ord) {
            loc.idx.push_back(G.generators.size());
            loc.local_gens.push_back(local_gen);
            G.generators.push_back(lift(local_gen));
            G.orders.push_back(ord);
        };
        if (p == 2) {
            if (e == 2) push(3, 2);
            if (e >= 3) {
                push(pe - 1, 2);
                push(5, pe / 4);
            }
        } else {
            push(primitive_root_prime_power(p, e, pe), pe / p * (p - 1));
        }
        G.locals.push_back(std::move(loc));
    }
    return G;
}

std::uint64_t UnitGroup::size() const {
    std::uint64_t n = 1;
    for (auto o : orders) n *= o;
    return n;
}

std::uint64_t UnitGroup::element(const std::vector<std::uint64_t>& exps) const {
    std::uint64_t r = 1 % modulus;
    for (std::size_t i = 0; i < generators.size(); ++i) r = mulmod(r, powmod(generators[i], exps[i], modulus), modulus);
    return r;
}

std::vector<std::uint64_t> UnitGroup::dlog(std::uint64_t a) const {
    std::vector<std::uint64_t> x(generators.size(), 0);
    for (auto& loc : locals) {
        std::uint64_t al = a % loc.pe;
        if (loc.local_gens.size() == 1) {
            std::uint64_t g = loc.local_gens[0], y = 1 % loc.pe, k = 0;
            std::uint64_t n = orders[loc.idx[0]];
            while (y != al) {
                y = mulmod(y, g, loc.pe);
                if (++k >= n) throw invalid_argument("dlog: not a unit");
            }
            x[loc.idx[0]] = k;
        } else if (loc.local_gens.size() == 2) {
            // a = (-1)^s 5^k mod 2^e
            std::uint64_t s = (al % 4 == 3) ? 1 : 0;
            if (al % 2 == 0) throw invalid_argument("dlog: not a unit");
            std::uint64_t target = s ? (loc.pe - al) % loc.pe : al;
            std::uint64_t n = orders[loc.idx[1]], y = 1, k = 0;
            while (y != target) {
                y = mulmod(y, 5, loc.pe);
                if (++k >= n) throw internal_error("dlog: 2-adic component failed");
            }
            x[loc.idx[0]] = s;
            x[loc.idx[1]] = k;
        } else if (al != 1 % loc.pe) {
            throw invalid_argument("dlog: not a unit");
        }
    }
    return x;
}

}  // namespace glue
