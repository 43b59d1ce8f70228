#include "glue/screen/character.hpp"

#include <numeric>

#include "glue/errors.hpp"

namespace glue {

std::uint64_t primitive_root(std::uint64_t ell) {
    if (ell < 2 || !is_probable_prime(from_u64(ell))) throw invalid_argument("primitive_root: modulus must be prime");
    if (ell == 2) return 1;
    auto fac = factor(from_u64(ell - 1));
    for (std::uint64_t g = 2;; ++g) {
        bool ok = true;
        for (auto& [q, _] : fac)
            if (powmod(g, (ell - 1) / to_u64(q), ell) == 1) ok = false;
        if (ok) return g;
    }
}

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::uint64_t ell, std::vector<std::uint64_t> exponents)
    : modulus_(modulus), ell_(ell), exponents_(std::move(exponents)), group_(unit_group(modulus)) {
    if (exponents_.size() != group_.generators.size())
        throw invalid_argument("DirichletCharacter: one exponent per generator of (Z/" + std::to_string(modulus) + ")^*");
    std::uint64_t w = primitive_root(ell);
    std::vector<std::uint64_t> gen_val(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        std::uint64_t d = std::gcd(group_.orders[i], ell - 1);
        admissible_.push_back(d);
        exponents_[i] %= d;
        gen_val[i] = powmod(w, (ell - 1) / d * exponents_[i], ell);
    }
    // D stays small (at most l * sqrt(N)), so tabulate
    table_.assign(modulus, 0);
    if (modulus == 1) {
        table_[0] = 1;
        return;
    }
    // walk the group by mixed-radix counting over generator exponents
    std::vector<std::uint64_t> x(exponents_.size(), 0);
    std::uint64_t elt = 1, val = 1;
    const std::uint64_t n = group_.size();
    for (std::uint64_t step = 0; step < n; ++step) {
        table_[elt] = val;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (++x[i] < group_.orders[i]) {
                elt = mulmod(elt, group_.generators[i], modulus);
                val = mulmod(val, gen_val[i], ell);
                break;
            }
            // wrapped: g_i^{n_i} = 1, chi(g_i)^{n_i} = 1
            x[i] = 0;
            elt = mulmod(elt, group_.generators[i], modulus);
            val = mulmod(val, gen_val[i], ell);
        }
    }
}

DirichletCharacter DirichletCharacter::trivial(std::uint64_t modulus, std::uint64_t ell) {
    return DirichletCharacter(modulus, ell, std::vector<std::uint64_t>(unit_group(modulus).generators.size(), 0));
}

std::uint64_t DirichletCharacter::operator()(std::uint64_t a) const {
    std::uint64_t v = table_[a % modulus_];
    if (v == 0) throw invalid_argument("character evaluated at " + std::to_string(a) + ", not prime to " + std::to_string(modulus_));
    return v;
}

bool DirichletCharacter::is_trivial() const {
    for (auto e : exponents_)
        if (e != 0) return false;
    return true;
}

std::uint64_t DirichletCharacter::order() const {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        std::uint64_t d = admissible_[i];
        std::uint64_t oi = d / std::gcd(d, exponents_[i]);
        o = std::lcm(o, oi);
    }
    return o;
}

std::string DirichletCharacter::str() const {
    std::string s = "chi mod " + std::to_string(modulus_) + " -> F_" + std::to_string(ell_) + "^* [";
    for (std::size_t i = 0; i < exponents_.size(); ++i) s += (i ? "," : "") + std::to_string(exponents_[i]);
    return s + "]";
}

std::vector<DirichletCharacter> all_characters(std::uint64_t D, std::uint64_t ell) {
    UnitGroup G = unit_group(D);
    std::vector<std::uint64_t> d(G.orders.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::gcd(G.orders[i], ell - 1);
    std::vector<DirichletCharacter> out;
    std::vector<std::uint64_t> e(d.size(), 0);
    // lexicographic, first exponent most significant
    for (;;) {
        out.emplace_back(D, ell, e);
        std::size_t i = d.size();
        while (i > 0) {
            --i;
            if (++e[i] < d[i]) break;
            e[i] = 0;
            if (i == 0) return out;
        }
        if (d.empty()) return out;
    }
}

}  // namespace glue
