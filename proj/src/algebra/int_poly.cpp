#include "glue/algebra/int_poly.hpp"

#include <sstream>
#include <utility>

#include "glue/errors.hpp"

namespace glue {

IntPoly::IntPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(unsigned deg, const Integer& c) {
    std::vector<Integer> v(deg + 1, Integer(0));
    v[deg] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::eval(const Integer& x) const {
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (auto& a : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return *this;
    Integer g = content();
    std::vector<Integer> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Integer> v(std::max(c_.size(), o.c_.size()), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<Integer> v(c_);
    for (auto& a : v) a = -a;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Integer> v(c_.size() + o.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Integer& s) const {
    std::vector<Integer> v(c_);
    for (auto& a : v) a *= s;
    return IntPoly(std::move(v));
}

std::vector<std::uint64_t> IntPoly::mod_u64(std::uint64_t m) const {
    std::vector<std::uint64_t> out(c_.size());
    Integer mm = from_u64(m);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = to_u64(mod(c_[i], mm));
    return out;
}

std::string IntPoly::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = c_[i];
        if (a == 0) continue;
        Integer mag = a < 0 ? Integer(-a) : a;
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw invalid_argument("pseudo_remainder by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<Integer> r(a.coeffs());
    const auto& bc = b.coeffs();
    int db = b.degree();
    Integer lb = b.lead();
    // one multiplication by lb per step, lb^{delta+1} overall
    for (int i = a.degree(); i >= db; --i) {
        Integer t = r[i];
        for (auto& x : r) x *= lb;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
    }
    r.resize(db);
    return IntPoly(std::move(r));
}

static Integer ipow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw invalid_argument("resultant: zero polynomial");
    IntPoly A = f, B = g;
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) s = -1;
    }
    if (B.degree() == 0) return s * ipow(B.lead(), A.degree());
    Integer a = A.content(), b = B.content();
    A = A.primitive();
    B = B.primitive();
    Integer t = ipow(a, B.degree()) * ipow(b, A.degree());
    Integer gg = 1, h = 1;
    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = pseudo_remainder(A, B);
        if (R.is_zero()) return 0;
        A = B;
        Integer div = gg * ipow(h, delta);
        std::vector<Integer> rc(R.coeffs());
        for (auto& x : rc) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), div.get_mpz_t());
        B = IntPoly(std::move(rc));
        gg = A.lead();
        // h <- h^{1-delta} g^delta, exact
        if (delta == 0) {
            // h unchanged
        } else {
            Integer num = ipow(gg, delta), den = ipow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.degree() == 0) {
            int dA = A.degree();
            Integer num = ipow(B.lead(), dA), den = ipow(h, dA - 1);
            Integer hh;
            mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return s * t * hh;
        }
    }
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
    IntPoly A = f.primitive(), B = g.primitive();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        IntPoly R = pseudo_remainder(A, B);
        A = B;
        B = R.primitive();
    }
    if (!A.is_zero() && A.lead() < 0) A = -A;
    return A;
}

Integer discriminant(const IntPoly& f) {
    int n = f.degree();
    if (n < 1) throw invalid_argument("discriminant: degree < 1");
    Integer r = resultant(f, f.derivative());
    Integer d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.lead().get_mpz_t());
    if (((n * (n - 1)) / 2) & 1) d = -d;
    return d;
}

}  // namespace glue
