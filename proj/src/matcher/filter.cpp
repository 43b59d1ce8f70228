#include "glue/matcher/filter.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "glue/errors.hpp"
#include "glue/models/point_count.hpp"

namespace glue {

const ApMemo::Entry& ApMemo::get(const EllipticCurve& X, std::uint64_t p) {
    auto key = std::make_pair(X.label, p);
    {
        std::shared_lock lk(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Entry e{ap_elliptic(X, p), reduction_type(X, p)};
    std::unique_lock lk(mu_);
    return memo_.emplace(std::move(key), e).first->second;  // map nodes are stable
}

std::int64_t ApMemo::ap(const EllipticCurve& X, std::uint64_t p) { return get(X, p).ap; }
Reduction ApMemo::reduction(const EllipticCurve& X, std::uint64_t p) { return get(X, p).red; }

std::size_t ApMemo::size() const {
    std::shared_lock lk(mu_);
    return memo_.size();
}

std::vector<std::string> CandidateReport::survivor_labels() const {
    std::vector<std::string> out;
    for (auto& s : survivors) out.push_back(s.label);
    return out;
}

bool trace_compatible(std::uint64_t b, std::int64_t a, Reduction red, std::uint64_t p, std::uint64_t l) {
    std::int64_t L = static_cast<std::int64_t>(l);
    auto red_l = [&](std::int64_t v) { return static_cast<std::uint64_t>(((v % L) + L) % L); };
    std::uint64_t s = (p + 1) % l;
    switch (red) {
        case Reduction::good: return b == red_l(a);
        case Reduction::split_mult: return b == s;
        case Reduction::nonsplit_mult: return b == (l - s) % l;
        case Reduction::additive: return l < 5;  // no constraint at l = 3
    }
    return false;
}

namespace {

struct BRow {
    std::uint64_t p, b;
};

}  // namespace

CandidateReport filter_elliptic(const TraceFunction& t, const std::vector<EllipticCurve>& dataset, std::uint64_t bound,
                                ApMemo* memo, unsigned threads) {
    if (bound < 2) throw invalid_argument("filter_elliptic: bound must be >= 2");
    CandidateReport rep;
    rep.y_label = t.Y.label;
    rep.ell = t.ell;
    rep.chi_exponents = t.chi.exponents();
    rep.chi_modulus = t.chi.modulus();
    rep.bound = bound;

    std::vector<BRow> rows;
    for (auto p : primes_up_to(bound))
        if (t.defined_at(p)) rows.push_back({p, trace_b(t, p)});
    if (t.ell >= 5)
        for (auto& r : rows)
            if (nonexistence_certificate(t, r.p)) rep.certificate_primes.push_back(r.p);

    ApMemo local;
    ApMemo& M = memo ? *memo : local;

    // per-curve outcome, index-aligned with the dataset
    std::vector<std::optional<Evidence>> fail(dataset.size());
    std::vector<std::vector<Evidence>> ev(dataset.size());
    auto work = [&](std::size_t i) {
        const auto& X = dataset[i];
        for (auto& r : rows) {
            Evidence e{r.p, r.b, M.ap(X, r.p), M.reduction(X, r.p)};
            ev[i].push_back(e);
            if (!trace_compatible(r.b, e.a_pX, e.reduction, r.p, t.ell)) {
                fail[i] = e;
                return;
            }
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1 || dataset.size() < 2) {
        for (std::size_t i = 0; i < dataset.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next++) < dataset.size();) work(i);
            });
    }

    for (std::size_t i = 0; i < dataset.size(); ++i) {
        if (fail[i])
            rep.rejections.push_back({dataset[i].label, *fail[i]});
        else
            rep.survivors.push_back({dataset[i].label, std::move(ev[i])});
    }
    return rep;
}

std::optional<bool> discriminant_filter(const EllipticCurve& X, const TraceFunction& t, std::uint64_t bound) {
    if (!X.disc_min) return std::nullopt;
    for (auto p : primes_up_to(bound)) {
        if (!t.Y.is_good(p)) continue;
        if (X.conductor_valuation(p) != 1) continue;
        unsigned v = valuation(*X.disc_min, from_u64(p));
        if (v % t.ell != 0) return false;
    }
    return true;
}

}  // namespace glue
