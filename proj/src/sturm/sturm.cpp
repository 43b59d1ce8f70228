#include "glue/sturm/sturm.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "glue/errors.hpp"
#include "glue/models/point_count.hpp"

namespace glue {

const char* const certified_character_caveat =
    "When multiple characters survive screening, a true verdict is conditional on the character actually "
    "belonging to H.";

SturmParameters sturm_parameters(const Factorization& NX, const Factorization& NY, std::uint64_t ell) {
    // exponent of each prime in M: max(v(N_X), v(N_Y) + 1)
    std::map<Integer, unsigned, decltype([](const Integer& a, const Integer& b) { return cmp(a, b) < 0; })> e;
    for (auto& pp : NX) e[pp.prime] = std::max(e[pp.prime], pp.exponent);
    for (auto& pp : NY) e[pp.prime] = std::max(e[pp.prime], pp.exponent + 1);
    SturmParameters s;
    s.M = 1;
    Integer num = 1, den = 12;
    for (auto& [p, k] : e) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
        s.M *= pk;
        num *= p - 1;
        den *= p;
    }
    bool ell_bad = std::any_of(NY.begin(), NY.end(), [&](const PrimePower& pp) { return pp.prime == from_u64(ell); });
    s.k = ell_bad ? static_cast<unsigned>(ell * ell + 1) : 2;
    num *= s.M * s.k;
    mpz_fdiv_q(s.B.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s;
}

SturmParameters sturm_parameters(const Integer& NX, const Integer& NY, std::uint64_t ell) {
    return sturm_parameters(factor(NX), factor(NY), ell);
}

IrreducibilityCertificate certify_irreducible(const TraceFunction& t, std::uint64_t bound) {
    IrreducibilityCertificate cert;
    cert.bound = bound;
    const std::uint64_t l = t.ell;
    auto eps = all_characters(t.chi.modulus(), l);
    std::vector<bool> alive(eps.size(), true);
    std::size_t remaining = eps.size();
    for (auto p : primes_up_to(bound)) {
        if (!remaining) break;
        if (!t.defined_at(p) || t.Y.discriminant() % p == 0) continue;
        std::uint64_t b = trace_b(t, p);
        for (std::size_t i = 0; i < eps.size(); ++i) {
            if (!alive[i]) continue;
            std::uint64_t v = eps[i](p);
            std::uint64_t expect = (v + mulmod(p % l, invmod(v, l), l)) % l;
            if (b != expect) {
                alive[i] = false;
                --remaining;
                cert.eliminated.emplace_back(eps[i].exponents(), p);
            }
        }
    }
    for (std::size_t i = 0; i < eps.size(); ++i)
        if (alive[i]) cert.survivors.push_back(eps[i].exponents());
    cert.irreducible = cert.survivors.empty();
    return cert;
}

// --- checkpoint

namespace {

std::string header_for(const GenusTwoCurve& Y) {
    std::ostringstream h;
    h << ApCheckpoint::magic << "\ncurve " << Y.label << "\nf";
    for (std::size_t i = 0; i < 7; ++i) h << ' ' << (i < Y.f.coeffs().size() ? Y.f.coeffs()[i] : Integer(0));
    h << "\nh";
    for (std::size_t i = 0; i < 4; ++i) h << ' ' << (i < Y.h.coeffs().size() ? Y.h.coeffs()[i] : Integer(0));
    h << '\n';
    return h.str();
}

}  // namespace

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, const GenusTwoCurve& Y) {
    std::string name = Y.label;
    for (auto& c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-') c = '_';
    return dir / (name + ".apY");
}

ApCheckpoint::ApCheckpoint(std::filesystem::path file, const GenusTwoCurve& Y)
    : file_(std::move(file)), header_(header_for(Y)) {
    std::ifstream in(file_);
    if (!in) return;
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (content.compare(0, header_.size(), header_) != 0)
        throw parse_error(file_.string() + ": checkpoint belongs to a different curve or format", {});
    std::istringstream body(content.substr(header_.size()));
    std::string line;
    std::size_t lineno = std::count(header_.begin(), header_.end(), '\n');
    std::vector<std::pair<std::size_t, std::string>> bad;
    while (std::getline(body, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::uint64_t p;
        std::int64_t a;
        std::string rest;
        if (!(ls >> p >> a) || (ls >> rest)) {
            bad.emplace_back(lineno, "expected '<p> <a_p>'");
            continue;
        }
        records_[p] = a;
    }
    if (!bad.empty()) throw parse_error(file_.string() + ": corrupt checkpoint", bad);
}

void ApCheckpoint::append(const std::vector<std::pair<std::uint64_t, std::int64_t>>& batch) {
    for (auto& [p, a] : batch) records_[p] = a;
    if (file_.empty()) return;
    // whole-file rewrite + rename: a crash leaves either the old or the new file
    auto tmp = file_;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << header_;
        for (auto& [p, a] : records_) out << p << ' ' << a << '\n';
        if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, file_);
}

// --- proof

SturmVerdict prove_isomorphism(const EllipticCurve& X, const TraceFunction& t, const IrreducibilityCertificate& cert,
                               const SturmOptions& opts) {
    if (!cert.irreducible) throw invalid_argument("prove_isomorphism needs an irreducibility certificate");
    const GenusTwoCurve& Y = t.Y;
    const std::uint64_t l = t.ell;

    SturmVerdict v;
    v.params = sturm_parameters(X.conductor_factors, Y.conductor_factors, l);
    v.bound = opts.bound ? *opts.bound : to_u64(v.params.B);
    v.chi_trivial = t.chi.is_trivial();
    v.caveat = certified_character_caveat;

    std::vector<std::uint64_t> primes;
    for (auto p : primes_up_to(v.bound))
        if (t.defined_at(p)) primes.push_back(p);
    const Integer discY = Y.discriminant();

    ApCheckpoint ck;
    if (opts.checkpoint_dir) {
        std::filesystem::create_directories(*opts.checkpoint_dir);
        ck = ApCheckpoint(checkpoint_path(*opts.checkpoint_dir, Y), Y);
    }

    const std::size_t batch = std::max<std::uint64_t>(1, opts.batch);
    const unsigned threads = std::max(1u, opts.threads);
    for (std::size_t start = 0; start < primes.size(); start += batch) {
        std::vector<std::uint64_t> chunk(primes.begin() + start, primes.begin() + std::min(primes.size(), start + batch));
        for (auto p : chunk)
            if (discY % p == 0) throw bad_reduction(p, Y.label + ": model is singular mod " + std::to_string(p));

        // a_{p,Y} for the chunk: cached or computed, strided across workers
        std::vector<std::int64_t> ap(chunk.size());
        std::vector<std::size_t> todo;
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            auto it = ck.records().find(chunk[i]);
            if (it != ck.records().end()) ap[i] = it->second;
            else todo.push_back(i);
        }
        if (!todo.empty()) {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < threads; ++w)
                pool.emplace_back([&, w] {
                    for (std::size_t j = w; j < todo.size(); j += threads) ap[todo[j]] = trace_g2(Y, chunk[todo[j]]);
                });
            pool.clear();
            std::vector<std::pair<std::uint64_t, std::int64_t>> fresh;
            for (auto i : todo) fresh.emplace_back(chunk[i], ap[i]);
            ck.append(fresh);
        }

        for (std::size_t i = 0; i < chunk.size(); ++i) {
            const std::uint64_t p = chunk[i];
            std::uint64_t b = trace_b_from(t, p, ap[i]);
            ++v.primes_checked;
            v.last_prime = p;
            if (X.conductor % p != 0) {
                std::uint64_t a = static_cast<std::uint64_t>(mod_small(Integer(static_cast<long>(ap_elliptic(X, p))), l));
                if (b != a) {
                    v.witness = p;
                    v.witness_reason = "b_p = " + std::to_string(b) + " but a_p(X) = " + std::to_string(a) + " mod " +
                                       std::to_string(l);
                }
            } else {
                auto red = reduction_type(X, p);
                if (red == Reduction::split_mult || red == Reduction::nonsplit_mult) {
                    std::uint64_t a = red == Reduction::split_mult ? 1 : l - 1;
                    if (mulmod(b, a, l) != (p + 1) % l) {
                        v.witness = p;
                        v.witness_reason = "X multiplicative, b_p a_p(X) = " + std::to_string(mulmod(b, a, l)) +
                                           " but p + 1 = " + std::to_string((p + 1) % l) + " mod " + std::to_string(l);
                    }
                }
            }
            if (v.witness) {
                v.complete = true;
                return v;
            }
        }
        if (opts.progress && !opts.progress(v.last_prime)) return v;  // interrupted: complete = false
    }
    v.complete = true;
    v.isomorphic = true;
    return v;
}

}  // namespace glue
