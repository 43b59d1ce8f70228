#include "glue/screen/trace.hpp"

#include "glue/errors.hpp"
#include "glue/models/point_count.hpp"

namespace glue {

TraceFunction::TraceFunction(GenusTwoCurve Y_, std::uint64_t ell_, DirichletCharacter chi_)
    : Y(std::move(Y_)), ell(ell_), chi(std::move(chi_)) {
    if (chi.ell() != ell) throw invalid_argument("TraceFunction: character takes values in the wrong field");
}

bool TraceFunction::defined_at(std::uint64_t p) const {
    return p != ell && Y.is_good(p) && chi.modulus() % p != 0;
}

std::uint64_t trace_b_from(const TraceFunction& t, std::uint64_t p, std::int64_t a_pY) {
    if (!t.defined_at(p)) throw invalid_argument("b_p undefined at p = " + std::to_string(p));
    const std::uint64_t l = t.ell;
    std::uint64_t c = t.chi(p);
    std::uint64_t a = static_cast<std::uint64_t>(((a_pY % static_cast<std::int64_t>(l)) + l) % l);
    std::uint64_t q = mulmod(p % l, invmod(c, l), l);
    return (a + 2 * l - c - q) % l;
}

std::uint64_t trace_b(const TraceFunction& t, std::uint64_t p) {
    if (!t.defined_at(p)) throw invalid_argument("b_p undefined at p = " + std::to_string(p));
    return trace_b_from(t, p, trace_g2(t.Y, p));
}

bool nonexistence_certificate(const TraceFunction& t, std::uint64_t p) {
    const std::uint64_t l = t.ell;
    if (l < 5) throw invalid_argument("nonexistence_certificate needs l >= 5");
    if (p == l || !t.defined_at(p)) throw invalid_argument("nonexistence_certificate: p = " + std::to_string(p) + " unusable");
    std::uint64_t b = trace_b(t, p);
    // residues of [-r, r], r = floor(2 sqrt p)
    std::uint64_t r = to_u64(isqrt(from_u64(4 * p)));
    if (2 * r + 1 >= l) return false;
    for (std::uint64_t n = 0; n <= r; ++n)
        if (b == n % l || b == (l - n % l) % l) return false;
    std::uint64_t s = (p + 1) % l;
    return b != s && b != (l - s) % l;
}

std::optional<std::uint64_t> find_certificate(const TraceFunction& t, const std::vector<std::uint64_t>& primes) {
    for (auto p : primes) {
        if (!t.defined_at(p) || p == t.ell) continue;
        if (nonexistence_certificate(t, p)) return p;
    }
    return std::nullopt;
}

}  // namespace glue
