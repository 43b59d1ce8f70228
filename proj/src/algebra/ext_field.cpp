#include "glue/algebra/ext_field.hpp"

#include <sstream>

#include "glue/errors.hpp"

namespace glue {

namespace {

fp::Poly least_irreducible(const PrimeField& F, unsigned k) {
    const std::uint64_t p = F.p();
    fp::Poly m(k + 1, 0);
    m[k] = 1;
    if (k == 1) return m;  // t itself
    // odometer over (c_0 .. c_{k-1}) with c_{k-1} most significant; c_0 = 0 is reducible
    while (true) {
        if (m[0] != 0 && fp::is_irreducible(F, m)) return m;
        unsigned i = 0;
        while (i < k) {
            if (++m[i] < p) break;
            m[i] = 0;
            ++i;
        }
        if (i == k) throw internal_error("no irreducible polynomial found");
    }
}

}  // namespace

ExtensionField::ExtensionField(const PrimeField& base, unsigned degree)
    : base_(base), k_(degree) {
    if (degree == 0) throw invalid_argument("ExtensionField: degree must be positive");
    mod_ = least_irreducible(base_, k_);
    setup();
}

ExtensionField::ExtensionField(const PrimeField& base, fp::Poly modulus)
    : base_(base), mod_(std::move(modulus)) {
    fp::trim(mod_);
    if (fp::degree(mod_) < 1 || mod_.back() != 1) throw invalid_argument("ExtensionField: modulus must be monic");
    if (!fp::is_irreducible(base_, mod_)) throw invalid_argument("ExtensionField: modulus is reducible");
    k_ = static_cast<unsigned>(fp::degree(mod_));
    setup();
}

void ExtensionField::setup() {
    mpz_pow_ui(q_.get_mpz_t(), from_u64(base_.p()).get_mpz_t(), k_);
    // t^p, then its powers
    Fq tp = pow(gen(), from_u64(base_.p()));
    frob_.assign(k_, one());
    for (unsigned i = 1; i < k_; ++i) frob_[i] = mul(frob_[i - 1], tp);
    if (base_.p() != 2) {
        Integer t = q_ - 1;
        ts_s_ = 0;
        while (mpz_even_p(t.get_mpz_t())) t /= 2, ++ts_s_;
        ts_t_ = t;
        // deterministic nonresidue: scan elements in counting order
        Fq z = zero();
        Integer half = (q_ - 1) / 2;
        for (std::uint64_t idx = 1;; ++idx) {
            std::uint64_t v = idx;
            for (unsigned i = 0; i < k_; ++i) {
                z[i] = v % base_.p();
                v /= base_.p();
            }
            Fq e = pow(z, half);
            if (!is_one(e)) break;
        }
        ts_z_ = pow(z, ts_t_);
    }
}

Fq ExtensionField::from_base(std::uint64_t a) const {
    Fq r(k_, 0);
    r[0] = a % base_.p();
    return r;
}

Fq ExtensionField::gen() const {
    Fq r(k_, 0);
    if (k_ == 1)
        r[0] = base_.neg(mod_[0]);
    else
        r[1] = 1;
    return r;
}

bool ExtensionField::is_zero(const Fq& a) const {
    for (auto c : a)
        if (c) return false;
    return true;
}

bool ExtensionField::is_one(const Fq& a) const {
    if (a[0] != 1) return false;
    for (unsigned i = 1; i < k_; ++i)
        if (a[i]) return false;
    return true;
}

bool ExtensionField::in_base(const Fq& a) const {
    for (unsigned i = 1; i < k_; ++i)
        if (a[i]) return false;
    return true;
}

Fq ExtensionField::add(const Fq& a, const Fq& b) const {
    Fq r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
}

Fq ExtensionField::sub(const Fq& a, const Fq& b) const {
    Fq r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
}

Fq ExtensionField::neg(const Fq& a) const {
    Fq r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = base_.neg(a[i]);
    return r;
}

Fq ExtensionField::scale(const Fq& a, std::uint64_t s) const {
    Fq r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = base_.mul(a[i], s);
    return r;
}

Fq ExtensionField::mul(const Fq& a, const Fq& b) const {
    const std::uint64_t p = base_.p();
    if (k_ == 1) return Fq{base_.mul(a[0], b[0])};
    // 128-bit accumulators; p < 2^63 so each product < 2^126 and we reduce per term
    // when p is small enough to batch
    std::vector<std::uint64_t> r(2 * k_ - 1, 0);
    if (p < (1ull << 28)) {
        // k products of size < 2^56 fit in 64 bits for k < 256
        std::vector<std::uint64_t> acc(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < k_; ++j) acc[i + j] += a[i] * b[j];
            if ((i & 127) == 127)
                for (auto& x : acc) x %= p;
        }
        for (std::size_t i = 0; i < acc.size(); ++i) r[i] = acc[i] % p;
    } else {
        std::vector<unsigned __int128> acc(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; j < k_; ++j) acc[i + j] = (acc[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
        for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i]);
    }
    // reduce by the monic modulus
    for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
        std::uint64_t c = r[i];
        if (!c) continue;
        for (unsigned j = 0; j < k_; ++j) r[i - k_ + j] = base_.sub(r[i - k_ + j], base_.mul(c, mod_[j]));
    }
    r.resize(k_);
    return r;
}

Fq ExtensionField::inv(const Fq& a) const {
    if (is_zero(a)) throw invalid_argument("ExtensionField::inv of zero");
    if (k_ == 1) return Fq{base_.inv(a[0])};
    // extended Euclid: track s with s*a = r mod m
    fp::Poly r0 = mod_, r1 = a, s0, s1{1};
    fp::trim(r1);
    while (fp::degree(r1) > 0) {
        fp::Poly q, r;
        fp::divmod(base_, r0, r1, q, r);
        fp::Poly s = fp::sub(base_, s0, fp::mul(base_, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw internal_error("ExtensionField::inv: modulus not irreducible");
    fp::Poly res = fp::scale(base_, s1, base_.inv(r1[0]));
    Fq out(k_, 0);
    for (std::size_t i = 0; i < res.size() && i < k_; ++i) out[i] = res[i];
    return out;
}

Fq ExtensionField::pow(const Fq& a, const Integer& e) const {
    if (e < 0) return pow(inv(a), Integer(-e));
    Fq r = one();
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (std::size_t i = bits; i-- > 0;) {
        r = sqr(r);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
}

Fq ExtensionField::frobenius(const Fq& a) const {
    if (frob_.empty()) return pow(a, from_u64(base_.p()));  // during setup
    Fq r = zero();
    for (unsigned i = 0; i < k_; ++i) {
        if (!a[i]) continue;
        for (unsigned j = 0; j < k_; ++j) r[j] = base_.add(r[j], base_.mul(a[i], frob_[i][j]));
    }
    return r;
}

bool ExtensionField::is_square(const Fq& a) const {
    if (is_zero(a) || base_.p() == 2) return true;
    return is_one(pow(a, (q_ - 1) / 2));
}

std::optional<Fq> ExtensionField::sqrt(const Fq& a) const {
    if (is_zero(a)) return a;
    if (base_.p() == 2) return pow(a, q_ / 2);
    if (!is_square(a)) return std::nullopt;
    unsigned m = ts_s_;
    Fq c = ts_z_;
    Fq t = pow(a, ts_t_);
    Fq r = pow(a, (ts_t_ + 1) / 2);
    while (!is_one(t)) {
        unsigned i = 0;
        Fq tt = t;
        while (!is_one(tt)) tt = sqr(tt), ++i;
        Fq b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = sqr(b);
        m = i;
        c = sqr(b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

Fq ExtensionField::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint64_t> d(0, base_.p() - 1);
    Fq r(k_);
    for (auto& c : r) c = d(rng);
    return r;
}

std::string ExtensionField::str(const Fq& a) const {
    std::ostringstream os;
    os << "[";
    for (unsigned i = 0; i < k_; ++i) os << (i ? "," : "") << a[i];
    os << "]";
    return os.str();
}

}  // namespace glue
