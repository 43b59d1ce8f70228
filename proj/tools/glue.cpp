// glue: screening, filtering and certification of (l, l)-gluing candidates.
// Exit codes: 0 ok, 1 usage, 2 data, 3 internal invariant violation.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "glue/cli/ingest.hpp"
#include "glue/cli/scan.hpp"
#include "glue/errors.hpp"
#include "glue/models/point_count.hpp"
#include "glue/screen/sieve.hpp"
#include "glue/sturm/sturm.hpp"
#include "glue/symplectic/symplectic.hpp"

using nlohmann::json;
using namespace glue;

namespace {

enum Exit { ok = 0, usage = 1, data = 2, internal = 3 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned default_threads() {
    if (const char* env = std::getenv("GLUE_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (...) {
        }
        std::cerr << "glue: ignoring GLUE_THREADS=" << env << "\n";
    }
    return 1;
}

struct Shared {
    std::vector<std::uint64_t> ells;
    std::optional<std::uint64_t> bound;
    std::uint64_t seed = 0;
    unsigned threads = default_threads();
    std::string output;
    std::string checkpoint_dir;
    bool no_timing = false;
    bool verify = false;
    std::string genus2_path, elliptic_path;
    std::vector<std::string> labels, x_labels;
};

std::vector<GenusTwoCurve> load_genus2(const Shared& s) {
    if (s.genus2_path.empty()) throw usage_error("--genus2 is required");
    auto all = ingest_genus2(s.genus2_path);
    if (s.labels.empty()) return all;
    std::vector<GenusTwoCurve> out;
    for (auto& l : s.labels) {
        auto it = std::find_if(all.begin(), all.end(), [&](auto& Y) { return Y.label == l; });
        if (it == all.end()) throw parse_error("no genus-2 curve labelled " + l + " in " + s.genus2_path, {});
        out.push_back(*it);
    }
    return out;
}

std::vector<EllipticCurve> load_elliptic(const Shared& s, bool required) {
    if (s.elliptic_path.empty()) {
        if (required) throw usage_error("--elliptic is required");
        return {};
    }
    auto all = ingest_elliptic(s.elliptic_path);
    if (s.x_labels.empty()) return all;
    std::vector<EllipticCurve> out;
    for (auto& l : s.x_labels) {
        auto it = std::find_if(all.begin(), all.end(), [&](auto& X) { return X.label == l; });
        if (it == all.end()) throw parse_error("no elliptic curve labelled " + l + " in " + s.elliptic_path, {});
        out.push_back(*it);
    }
    return out;
}

json envelope(const std::string& command) { return {{"schema_version", report_schema_version}, {"command", command}}; }

void emit(const Shared& s, const json& doc) {
    std::string text = doc.dump(2) + "\n";
    if (s.output.empty() || s.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(s.output, std::ios::trunc);
    if (!(out << text)) throw std::runtime_error("cannot write " + s.output);
}

ScanConfig scan_config(const Shared& s) {
    ScanConfig c;
    if (!s.ells.empty()) c.ells = s.ells;
    if (s.bound) c.p_bound = c.q_bound = c.trace_bound = c.filter_bound = *s.bound;
    c.seed = s.seed;
    c.threads = s.threads;
    c.timing = !s.no_timing;
    if (!s.checkpoint_dir.empty()) c.checkpoint_dir = s.checkpoint_dir;
    return c;
}

// scan-shaped commands: the report tree, optionally verified
int run_tree(const Shared& s, const std::string& command, ScanConfig c, bool need_elliptic) {
    auto g2 = load_genus2(s);
    auto ec = load_elliptic(s, need_elliptic);
    json doc = scan(c, g2, ec);
    doc["command"] = command;
    if (command == "certify") {
        // certificates only
        for (auto& y : doc["curves"])
            for (auto& l : y["ells"])
                for (auto& ch : l["characters"]) ch.erase("traces");
    }
    int code = ok;
    if (s.verify) {
        auto v = verify_report(doc, g2, ec);
        doc["verification"] = v.to_json();
        if (!v.ok()) code = internal;
    }
    for (auto& y : doc["curves"]) {
        auto scan_errors = [&](const json& errs) {
            for (auto& e : errs)
                if (e["kind"] == "internal") code = internal;
        };
        scan_errors(y["errors"]);
        for (auto& l : y["ells"]) {
            scan_errors(l["errors"]);
            for (auto& ch : l["characters"]) scan_errors(ch["errors"]);
        }
    }
    emit(s, doc);
    return code;
}

int cmd_frobpoly(const Shared& s, const std::vector<std::uint64_t>& ps) {
    auto t0 = std::chrono::steady_clock::now();
    auto g2 = load_genus2(s);
    std::vector<std::uint64_t> primes = ps;
    if (primes.empty()) primes = primes_up_to(s.bound.value_or(13));
    json doc = envelope("frobpoly"), rows = json::array();
    for (auto& Y : g2)
        for (auto p : primes) {
            if (!is_probable_prime(from_u64(p))) throw usage_error(std::to_string(p) + " is not prime");
            json r{{"label", Y.label}, {"p", p}};
            if (!Y.is_good(p)) {
                r["bad"] = true;
                rows.push_back(std::move(r));
                continue;
            }
            auto F = frobenius_polynomial(Y, p);
            r["a"] = F.a;
            r["a_prime"] = F.a_prime;
            IntPoly P = F.poly();
            json coeffs = json::array();
            for (auto& c : P.coeffs()) coeffs.push_back(json_int(c));
            r["coefficients"] = coeffs;  // ascending
            r["polynomial"] = P.str();
            rows.push_back(std::move(r));
        }
    doc["results"] = std::move(rows);
    if (!s.no_timing) doc["timing"] = {{"total", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    emit(s, doc);
    return ok;
}

int cmd_primes(const Shared& s) {
    auto t0 = std::chrono::steady_clock::now();
    auto g2 = load_genus2(s);
    json doc = envelope("primes"), rows = json::array();
    for (auto& Y : g2) {
        auto P = default_primes(Y, s.bound.value_or(100));
        auto r = prime_sieve(Y, P);
        rows.push_back({{"label", Y.label},
                        {"primes_used", P.size()},
                        {"d", json_int(r.d)},
                        {"resultant_gcd", json_int(r.resultant_gcd)},
                        {"l_good", r.l_good},
                        {"l_bad", r.l_bad},
                        {"possible_primes", r.primes}});
    }
    doc["results"] = std::move(rows);
    if (!s.no_timing) doc["timing"] = {{"total", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    emit(s, doc);
    return ok;
}

int cmd_symplectic(const Shared& s, std::optional<std::uint64_t> witness) {
    auto t0 = std::chrono::steady_clock::now();
    if (s.ells.size() != 1) throw usage_error("symplectic needs exactly one --ell");
    std::uint64_t ell = s.ells[0];
    auto g2 = load_genus2(s);
    auto ec = load_elliptic(s, true);
    json doc = envelope("symplectic"), rows = json::array();
    for (auto& Y : g2)
        for (auto& X : ec) {
            std::uint64_t seed = derive_seed(s.seed, Y.label + "/" + std::to_string(ell) + "/" + X.label);
            SymplecticVerdict v;
            if (witness) {
                v = symplectic_type(X, Y, ell, *witness, seed);
            } else {
                v = symplectic_verdict(X, Y, ell, seed, s.bound.value_or(500));
            }
            json r{{"genus2", Y.label}, {"elliptic", X.label}, {"ell", ell}, {"type", to_string(v.type)},
                   {"seed", std::to_string(seed)}};
            if (v.witness) {
                r["witness_prime"] = v.witness->p;
                r["w1"] = v.w1;
                r["w2"] = v.w2;
                r["alpha"] = v.witness->alpha;
                r["beta"] = v.witness->beta;
                r["gamma"] = v.witness->gamma;
                r["field_degree"] = v.witness->degree;
            }
            auto a = antisymplectic_exists(v);
            r["antisymplectic_exists"] = a ? json(*a) : json(nullptr);
            if (s.verify && v.witness) r["verified"] = check_witness(X, Y, ell, v.witness->p).has_value();
            rows.push_back(std::move(r));
        }
    doc["results"] = std::move(rows);
    if (!s.no_timing) doc["timing"] = {{"total", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    emit(s, doc);
    return ok;
}

int cmd_sturm(const Shared& s, const std::vector<std::uint64_t>& chi_exps, std::uint64_t irr_bound) {
    auto t0 = std::chrono::steady_clock::now();
    if (s.ells.size() != 1) throw usage_error("sturm needs exactly one --ell");
    std::uint64_t ell = s.ells[0];
    auto g2 = load_genus2(s);
    auto ec = load_elliptic(s, true);
    json doc = envelope("sturm"), rows = json::array();
    int code = ok;
    for (auto& Y : g2) {
        std::uint64_t D = character_modulus(Y, ell);
        DirichletCharacter chi = chi_exps.empty() ? DirichletCharacter::trivial(D, ell) : DirichletCharacter(D, ell, chi_exps);
        TraceFunction t(Y, ell, chi);
        auto cert = certify_irreducible(t, irr_bound);
        for (auto& X : ec) {
            json r{{"genus2", Y.label}, {"elliptic", X.label}, {"ell", ell}, {"character", chi.str()},
                   {"irreducible", cert.irreducible}, {"irreducibility_bound", irr_bound}};
            auto params = sturm_parameters(X.conductor_factors, Y.conductor_factors, ell);
            r["M"] = json_int(params.M);
            r["B"] = json_int(params.B);
            r["weight"] = params.k;
            if (!cert.irreducible) {
                r["verdict"] = nullptr;
                r["reason"] = "irreducibility inconclusive";
                rows.push_back(std::move(r));
                continue;
            }
            SturmOptions o;
            o.bound = s.bound;
            o.threads = s.threads;
            if (!s.checkpoint_dir.empty()) o.checkpoint_dir = s.checkpoint_dir;
            auto v = prove_isomorphism(X, t, cert, o);
            r["verdict"] = v.isomorphic;
            r["complete"] = v.complete;
            r["bound_checked"] = v.bound;
            r["primes_checked"] = v.primes_checked;
            r["witness"] = v.witness ? json(*v.witness) : json(nullptr);
            if (v.witness) r["witness_reason"] = v.witness_reason;
            r["character_trivial"] = v.chi_trivial;
            r["caveat"] = v.caveat;
            rows.push_back(std::move(r));
        }
    }
    doc["results"] = std::move(rows);
    if (!s.no_timing) doc["timing"] = {{"total", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    emit(s, doc);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"glue: find and certify (l, l)-gluing candidates between genus-2 and elliptic curves"};
    app.require_subcommand(1);
    app.fallthrough();
    Shared s;
    app.add_option("--ell", s.ells, "prime(s) l; overrides the sieve");
    app.add_option("--bound", s.bound, "prime bound (meaning depends on the command)");
    app.add_option("--seed", s.seed, "root seed");
    app.add_option("--threads", s.threads, "worker threads (default: GLUE_THREADS or 1)")->check(CLI::PositiveNumber);
    app.add_option("--output,-o", s.output, "write the JSON report here instead of stdout");
    app.add_option("--checkpoint-dir", s.checkpoint_dir, "resumable Sturm checkpoints");
    app.add_flag("--no-timing", s.no_timing, "omit timing metadata (byte-identical reruns)");
    app.add_flag("--verify", s.verify, "re-derive every stored claim before writing the report");
    app.add_option("--genus2", s.genus2_path, "genus-2 curves, JSON lines");
    app.add_option("--elliptic", s.elliptic_path, "elliptic curves, JSON lines");
    app.add_option("--label", s.labels, "restrict to these genus-2 labels");
    app.add_option("--x-label", s.x_labels, "restrict to these elliptic labels");

    std::vector<std::uint64_t> frob_primes;
    auto* frob = app.add_subcommand("frobpoly", "Frobenius polynomials F_{Y,p}");
    frob->add_option("-p,--prime", frob_primes, "primes (default: all <= --bound, or <= 13)");
    app.add_subcommand("primes", "possible primes l from the sieve");
    app.add_subcommand("traces", "characters and trace tables b_p");
    app.add_subcommand("certify", "nonexistence certificates");
    app.add_subcommand("filter", "Frobenius-trace filter against an elliptic dataset");
    std::optional<std::uint64_t> witness;
    auto* sym = app.add_subcommand("symplectic", "symplectic type at a witness prime");
    sym->add_option("-p,--prime", witness, "witness prime (default: least witness <= --bound, or <= 500)");
    std::vector<std::uint64_t> chi_exps;
    std::uint64_t irr_bound = 100;
    auto* sturm = app.add_subcommand("sturm", "Sturm-bound isomorphism proof");
    sturm->add_option("--chi", chi_exps, "character exponents (default: trivial)");
    sturm->add_option("--irreducibility-bound", irr_bound, "prime bound for certify_irreducible");
    bool long_mode = false;
    std::uint64_t witness_bound = 500;
    std::optional<std::uint64_t> sturm_bound;
    auto* scan_cmd = app.add_subcommand("scan", "the whole workflow");
    scan_cmd->add_flag("--long", long_mode, "also certify irreducibility and run the Sturm proof");
    scan_cmd->add_option("--witness-bound", witness_bound, "symplectic witness search bound");
    scan_cmd->add_option("--sturm-bound", sturm_bound, "cap the Sturm range");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        auto* sub = app.get_subcommands().front();
        std::string name = sub->get_name();
        for (auto l : s.ells)
            if (l < 2 || !is_probable_prime(from_u64(l))) throw usage_error("--ell " + std::to_string(l) + " is not prime");
        if (name == "frobpoly") return cmd_frobpoly(s, frob_primes);
        if (name == "primes") return cmd_primes(s);
        if (name == "symplectic") return cmd_symplectic(s, witness);
        if (name == "sturm") return cmd_sturm(s, chi_exps, irr_bound);
        ScanConfig c = scan_config(s);
        if (name == "traces" || name == "certify") {
            c.filter = c.symplectic = false;
            return run_tree(s, name, c, false);
        }
        if (name == "filter") {
            c.symplectic = false;
            return run_tree(s, name, c, true);
        }
        c.long_mode = long_mode;
        c.witness_bound = witness_bound;
        c.sturm_bound = sturm_bound;
        return run_tree(s, "scan", c, false);
    } catch (const usage_error& e) {
        std::cerr << "glue: " << e.what() << "\n";
        return usage;
    } catch (const parse_error& e) {
        std::cerr << "glue: " << e.what() << "\n";
        for (auto& [line, why] : e.lines) std::cerr << "  line " << line << ": " << why << "\n";
        return data;
    } catch (const bad_reduction& e) {
        std::cerr << "glue: " << e.what() << "\n";
        return data;
    } catch (const glue::invalid_argument& e) {
        std::cerr << "glue: " << e.what() << "\n";
        return usage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "glue: " << e.what() << "\n";
        return data;
    } catch (const std::exception& e) {
        std::cerr << "glue: internal error: " << e.what() << "\n";
        return internal;
    }
}
