#include "glue/cli/scan.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "glue/errors.hpp"
#include "glue/matcher/filter.hpp"
#include "glue/models/point_count.hpp"
#include "glue/screen/sieve.hpp"
#include "glue/screen/trace.hpp"
#include "glue/sturm/sturm.hpp"
#include "glue/symplectic/symplectic.hpp"

namespace glue {

using nlohmann::json;

json json_int(const Integer& z) {
    static const Integer limit = Integer(1) << 53;
    if (abs(z) <= limit) return json(z.get_si());
    return json(z.get_str());
}

std::uint64_t derive_seed(std::uint64_t root, const std::string& key) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) h = (h ^ c) * 1099511628211ull;
    std::uint64_t x = root ^ h;  // splitmix64 finalizer
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

json VerifyResult::to_json() const { return {{"checked", checked}, {"ok", ok()}, {"failures", failures}}; }

namespace {

using clock = std::chrono::steady_clock;

double seconds_since(clock::time_point t0) { return std::chrono::duration<double>(clock::now() - t0).count(); }

template <class F>
void parallel_for(std::size_t n, unsigned threads, F f) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += threads) f(i);
        });
}

json error_json(const std::string& stage, const std::exception& e) {
    bool internal = dynamic_cast<const internal_error*>(&e) || dynamic_cast<const basis_error*>(&e);
    return {{"stage", stage}, {"kind", internal ? "internal" : "data"}, {"message", e.what()}};
}

json evidence_json(const Evidence& e) {
    return {{"p", e.p}, {"b_p", e.b_p}, {"a_pX", e.a_pX}, {"reduction", to_string(e.reduction)}};
}

json verdict_json(const SymplecticVerdict& v, std::uint64_t seed) {
    json j{{"type", to_string(v.type)}, {"seed", std::to_string(seed)}};
    if (v.witness) {
        j["witness_prime"] = v.witness->p;
        j["w1"] = v.w1;
        j["w2"] = v.w2;
        j["alpha"] = v.witness->alpha;
        j["beta"] = v.witness->beta;
        j["gamma"] = v.witness->gamma;
        j["field_degree"] = v.witness->degree;
        j["attempts"] = {v.attempts_X, v.attempts_Y};
    } else {
        j["witness_prime"] = nullptr;
    }
    auto a = antisymplectic_exists(v);
    j["antisymplectic_exists"] = a ? json(*a) : json(nullptr);
    return j;
}

json sturm_json(const SturmVerdict& v) {
    json j{{"isomorphic", v.isomorphic},
           {"complete", v.complete},
           {"M", json_int(v.params.M)},
           {"B", json_int(v.params.B)},
           {"weight", v.params.k},
           {"bound_checked", v.bound},
           {"primes_checked", v.primes_checked},
           {"character_trivial", v.chi_trivial},
           {"caveat", v.caveat}};
    j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
    if (v.witness) j["witness_reason"] = v.witness_reason;
    return j;
}

struct SymplecticTask {
    const GenusTwoCurve* Y;
    const EllipticCurve* X;
    std::uint64_t ell;
};

}  // namespace

json scan(const ScanConfig& cfg, const std::vector<GenusTwoCurve>& genus2, const std::vector<EllipticCurve>& elliptic) {
    auto t_start = clock::now();
    json report;
    report["schema_version"] = report_schema_version;
    report["tool"] = "glue";
    report["config"] = {{"p_bound", cfg.p_bound},         {"q_bound", cfg.q_bound},
                        {"trace_bound", cfg.trace_bound}, {"filter_bound", cfg.filter_bound},
                        {"witness_bound", cfg.witness_bound}, {"seed", std::to_string(cfg.seed)},
                        {"filter", cfg.filter}, {"symplectic", cfg.symplectic}, {"long_mode", cfg.long_mode}};
    if (cfg.ells) report["config"]["ells"] = *cfg.ells;
    if (cfg.sturm_bound) report["config"]["sturm_bound"] = *cfg.sturm_bound;
    report["datasets"] = {{"genus2", genus2.size()}, {"elliptic", elliptic.size()}};

    std::map<std::string, const EllipticCurve*> by_label;
    for (auto& X : elliptic) by_label[X.label] = &X;

    ApMemo memo;
    json timing = json::object();
    json curves = json::array();

    // pass 1: screening and filtering; symplectic tasks collected for pass 2
    std::vector<SymplecticTask> tasks;
    std::map<std::tuple<std::string, std::uint64_t, std::string>, std::size_t> task_index;
    std::vector<std::pair<std::size_t, std::size_t>> pending;  // (index into flat survivor list, task)
    std::vector<json*> survivor_nodes;

    curves.get_ref<json::array_t&>().reserve(genus2.size());
    for (auto& Y : genus2) {
        auto t0 = clock::now();
        json rec{{"label", Y.label}, {"conductor", json_int(Y.conductor)}, {"errors", json::array()}, {"ells", json::array()}};
        std::vector<std::uint64_t> ells;
        try {
            auto P = default_primes(Y, cfg.p_bound);
            auto s = prime_sieve(Y, P);
            rec["sieve"] = {{"primes_used", P.size()},
                            {"d", json_int(s.d)},
                            {"resultant_gcd", json_int(s.resultant_gcd)},
                            {"l_good", s.l_good},
                            {"l_bad", s.l_bad}};
            rec["possible_primes"] = s.primes;
            ells = cfg.ells ? *cfg.ells : s.primes;
        } catch (const std::exception& e) {
            rec["errors"].push_back(error_json("possible_primes", e));
            if (cfg.ells) ells = *cfg.ells;
        }
        curves.push_back(std::move(rec));
        json& yrec = curves.back();

        for (auto ell : ells) {
            json lrec{{"ell", ell}, {"characters", json::array()}, {"errors", json::array()}};
            std::vector<DirichletCharacter> chars;
            try {
                lrec["character_modulus"] = character_modulus(Y, ell);
                std::vector<std::uint64_t> Q;
                for (auto q : primes_up_to(cfg.q_bound)) Q.push_back(q);
                chars = character_candidates(Y, ell, Q);
            } catch (const std::exception& e) {
                lrec["errors"].push_back(error_json("character_candidates", e));
            }
            for (auto& chi : chars) {
                json crec{{"exponents", chi.exponents()}, {"order", chi.order()}, {"trivial", chi.is_trivial()},
                          {"errors", json::array()}};
                TraceFunction t(Y, ell, chi);
                try {
                    json table = json::array();
                    for (auto p : primes_up_to(cfg.trace_bound))
                        if (t.defined_at(p) && Y.discriminant() % p != 0) table.push_back({p, trace_b(t, p)});
                    crec["traces"] = std::move(table);
                    if (ell >= 5) {
                        auto c = find_certificate(t, primes_up_to(cfg.trace_bound));
                        crec["certificate"] = c ? json(*c) : json(nullptr);
                    } else {
                        crec["certificate"] = nullptr;
                    }
                } catch (const std::exception& e) {
                    crec["errors"].push_back(error_json("traces", e));
                }
                if (cfg.filter) try {
                    auto r = filter_elliptic(t, elliptic, cfg.filter_bound, &memo, cfg.threads);
                    json survivors = json::array(), rejections = json::array();
                    for (auto& s : r.survivors) {
                        json sj{{"label", s.label}, {"evidence", json::array()}};
                        for (auto& e : s.evidence) sj["evidence"].push_back(evidence_json(e));
                        auto d = discriminant_filter(*by_label.at(s.label), t, cfg.filter_bound);
                        sj["discriminant_filter"] = d ? json(*d) : json(nullptr);
                        survivors.push_back(std::move(sj));
                    }
                    for (auto& rj : r.rejections) {
                        json w = evidence_json(rj.witness);
                        w["label"] = rj.label;
                        rejections.push_back(std::move(w));
                    }
                    crec["filter"] = {{"bound", cfg.filter_bound},
                                      {"tested", elliptic.size()},
                                      {"survivors", std::move(survivors)},
                                      {"rejections", std::move(rejections)}};
                } catch (const std::exception& e) {
                    crec["errors"].push_back(error_json("filter", e));
                }
                lrec["characters"].push_back(std::move(crec));
            }
            yrec["ells"].push_back(std::move(lrec));
        }
        if (cfg.timing) timing["screen"][Y.label] = seconds_since(t0);
    }

    // pointers are stable from here on: the tree is no longer resized
    for (std::size_t yi = 0; cfg.symplectic && yi < genus2.size(); ++yi)
        for (auto& lrec : curves[yi]["ells"]) {
            std::uint64_t ell = lrec["ell"];
            for (auto& crec : lrec["characters"]) {
                if (!crec.contains("filter")) continue;
                for (auto& sj : crec["filter"]["survivors"]) {
                    const EllipticCurve* X = by_label.at(sj["label"].get<std::string>());
                    auto key = std::make_tuple(genus2[yi].label, ell, X->label);
                    auto [it, fresh] = task_index.try_emplace(key, tasks.size());
                    if (fresh) tasks.push_back({&genus2[yi], X, ell});
                    survivor_nodes.push_back(&sj);
                    pending.emplace_back(survivor_nodes.size() - 1, it->second);
                }
            }
        }

    // pass 2: one symplectic verdict per (Y, l, X), shared across characters
    auto t_sym = clock::now();
    std::vector<json> verdicts(tasks.size());
    parallel_for(tasks.size(), cfg.threads, [&](std::size_t i) {
        auto& tk = tasks[i];
        std::uint64_t seed = derive_seed(cfg.seed, tk.Y->label + "/" + std::to_string(tk.ell) + "/" + tk.X->label);
        try {
            if (tk.ell < 3) {
                verdicts[i] = {{"type", "fail"}, {"reason", "l = 2"}, {"antisymplectic_exists", nullptr}};
                return;
            }
            verdicts[i] = verdict_json(symplectic_verdict(*tk.X, *tk.Y, tk.ell, seed, cfg.witness_bound), seed);
        } catch (const std::exception& e) {
            verdicts[i] = {{"type", "fail"}, {"error", error_json("symplectic", e)}, {"antisymplectic_exists", nullptr}};
        }
    });
    for (auto [node, task] : pending) {
        json& sj = *survivor_nodes[node];
        sj["symplectic"] = verdicts[task];
        sj["antisymplectic_exists"] = verdicts[task]["antisymplectic_exists"];
    }
    if (cfg.timing && cfg.symplectic) timing["symplectic"] = seconds_since(t_sym);

    // pass 3 (long mode): irreducibility + Sturm proof per (Y, l, chi, X)
    if (cfg.long_mode) {
        auto t_long = clock::now();
        for (std::size_t yi = 0; yi < genus2.size(); ++yi)
            for (auto& lrec : curves[yi]["ells"]) {
                std::uint64_t ell = lrec["ell"];
                for (auto& crec : lrec["characters"]) {
                    if (!crec.contains("filter") || crec["filter"]["survivors"].empty()) continue;
                    DirichletCharacter chi(lrec["character_modulus"].get<std::uint64_t>(), ell,
                                           crec["exponents"].get<std::vector<std::uint64_t>>());
                    TraceFunction t(genus2[yi], ell, chi);
                    try {
                        std::uint64_t B = 0;
                        for (auto& sj : crec["filter"]["survivors"]) {
                            auto* X = by_label.at(sj["label"].get<std::string>());
                            auto s = sturm_parameters(X->conductor_factors, genus2[yi].conductor_factors, ell);
                            B = std::max(B, cfg.sturm_bound ? std::min(*cfg.sturm_bound, to_u64(s.B)) : to_u64(s.B));
                        }
                        auto cert = certify_irreducible(t, B);
                        crec["irreducibility"] = {{"irreducible", cert.irreducible},
                                                  {"bound", cert.bound},
                                                  {"survivors", cert.survivors}};
                        if (!cert.irreducible) continue;
                        for (auto& sj : crec["filter"]["survivors"]) {
                            auto* X = by_label.at(sj["label"].get<std::string>());
                            SturmOptions o;
                            o.bound = cfg.sturm_bound;
                            o.threads = cfg.threads;
                            if (cfg.checkpoint_dir) o.checkpoint_dir = *cfg.checkpoint_dir;
                            try {
                                sj["sturm"] = sturm_json(prove_isomorphism(*X, t, cert, o));
                            } catch (const std::exception& e) {
                                sj["sturm"] = {{"error", error_json("sturm", e)}};
                            }
                        }
                    } catch (const std::exception& e) {
                        crec["errors"].push_back(error_json("irreducibility", e));
                    }
                }
            }
        if (cfg.timing) timing["long_mode"] = seconds_since(t_long);
    }

    report["curves"] = std::move(curves);
    if (cfg.timing) {
        timing["total"] = seconds_since(t_start);
        report["timing"] = std::move(timing);
    }
    return report;
}

VerifyResult verify_report(const json& report, const std::vector<GenusTwoCurve>& genus2,
                           const std::vector<EllipticCurve>& elliptic) {
    VerifyResult out;
    std::map<std::string, const GenusTwoCurve*> ys;
    std::map<std::string, const EllipticCurve*> xs;
    for (auto& Y : genus2) ys[Y.label] = &Y;
    for (auto& X : elliptic) xs[X.label] = &X;
    auto fail = [&](const std::string& where, const std::string& what) { out.failures.push_back(where + ": " + what); };

    for (auto& yrec : report.at("curves")) {
        std::string ylabel = yrec.at("label");
        auto yit = ys.find(ylabel);
        if (yit == ys.end()) {
            fail(ylabel, "genus-2 curve not in the dataset");
            continue;
        }
        const GenusTwoCurve& Y = *yit->second;
        for (auto& lrec : yrec.at("ells")) {
            std::uint64_t ell = lrec.at("ell");
            if (!lrec.contains("character_modulus")) continue;
            std::uint64_t D = lrec["character_modulus"];
            for (auto& crec : lrec.at("characters")) {
                DirichletCharacter chi(D, ell, crec.at("exponents").get<std::vector<std::uint64_t>>());
                TraceFunction t(Y, ell, chi);
                std::string where = ylabel + " l=" + std::to_string(ell) + " chi=" + chi.str();
                if (crec.contains("certificate") && !crec["certificate"].is_null()) {
                    ++out.checked;
                    if (!nonexistence_certificate(t, crec["certificate"].get<std::uint64_t>()))
                        fail(where, "certificate does not reproduce");
                }
                if (!crec.contains("filter")) continue;
                std::uint64_t bound = crec["filter"].at("bound");
                for (auto& sj : crec["filter"]["survivors"]) {
                    std::string xl = sj.at("label");
                    auto xit = xs.find(xl);
                    if (xit == xs.end()) {
                        fail(where, xl + " not in the dataset");
                        continue;
                    }
                    const EllipticCurve& X = *xit->second;
                    // evidence must cover exactly the usable primes and each row must recompute
                    std::vector<std::uint64_t> want;
                    for (auto p : primes_up_to(bound))
                        if (t.defined_at(p)) want.push_back(p);
                    std::vector<std::uint64_t> got;
                    for (auto& e : sj.at("evidence")) {
                        ++out.checked;
                        std::uint64_t p = e.at("p");
                        got.push_back(p);
                        auto red = reduction_type(X, p);
                        std::int64_t a = ap_elliptic(X, p);
                        if (e.at("b_p").get<std::uint64_t>() != trace_b(t, p) || e.at("a_pX").get<std::int64_t>() != a ||
                            e.at("reduction").get<std::string>() != to_string(red) ||
                            !trace_compatible(trace_b(t, p), a, red, p, ell))
                            fail(where + " " + xl, "evidence at p = " + std::to_string(p) + " does not recompute");
                    }
                    if (got != want) fail(where + " " + xl, "evidence does not cover every usable prime");
                    if (sj.contains("symplectic") && sj["symplectic"].contains("witness_prime") &&
                        !sj["symplectic"]["witness_prime"].is_null()) {
                        ++out.checked;
                        auto& s = sj["symplectic"];
                        auto w = check_witness(X, Y, ell, s["witness_prime"].get<std::uint64_t>());
                        if (!w || w->alpha != s["alpha"] || w->beta != s["beta"] || w->gamma != s["gamma"])
                            fail(where + " " + xl, "symplectic witness does not reproduce");
                        auto type = s["type"] == "positive" ? SymplecticType::positive : SymplecticType::negative;
                        if (s["antisymplectic_exists"] != json(*antisymplectic_exists(type, ell)))
                            fail(where + " " + xl, "antisymplectic flag inconsistent with type");
                    }
                }
                for (auto& rj : crec["filter"].at("rejections")) {
                    ++out.checked;
                    std::string xl = rj.at("label");
                    auto xit = xs.find(xl);
                    if (xit == xs.end()) {
                        fail(where, xl + " not in the dataset");
                        continue;
                    }
                    std::uint64_t p = rj.at("p");
                    auto red = reduction_type(*xit->second, p);
                    if (trace_compatible(trace_b(t, p), ap_elliptic(*xit->second, p), red, p, ell))
                        fail(where + " " + xl, "rejection witness p = " + std::to_string(p) + " is compatible");
                }
            }
        }
    }
    return out;
}

}  // namespace glue
