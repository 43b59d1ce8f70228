#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "glue/models/curves.hpp"
#include "glue/screen/trace.hpp"

namespace glue {

// a_{p,X} memo keyed by (label, p); safe for concurrent use
class ApMemo {
public:
    std::int64_t ap(const EllipticCurve& X, std::uint64_t p);
    Reduction reduction(const EllipticCurve& X, std::uint64_t p);
    std::size_t size() const;

private:
    struct Entry {
        std::int64_t ap;
        Reduction red;
    };
    const Entry& get(const EllipticCurve& X, std::uint64_t p);
    mutable std::shared_mutex mu_;
    std::map<std::pair<std::string, std::uint64_t>, Entry> memo_;
};

struct Evidence {
    std::uint64_t p = 0;
    std::uint64_t b_p = 0;  // in F_l
    std::int64_t a_pX = 0;  // trace or sentinel 1 / -1 / 0
    Reduction reduction = Reduction::good;
    bool operator==(const Evidence&) const = default;
};

struct Survivor {
    std::string label;
    std::vector<Evidence> evidence;  // one row per tested prime
};

struct Rejection {
    std::string label;
    Evidence witness;  // first failing prime
};

struct CandidateReport {
    std::string y_label;
    std::uint64_t ell = 0;
    std::vector<std::uint64_t> chi_exponents;
    std::uint64_t chi_modulus = 1;
    std::uint64_t bound = 0;
    std::vector<Survivor> survivors;
    std::vector<Rejection> rejections;
    std::vector<std::uint64_t> certificate_primes;

    std::size_t rejected_count() const { return rejections.size(); }
    std::vector<std::string> survivor_labels() const;
};

// the Frobenius-trace test at one prime; true iff consistent
bool trace_compatible(std::uint64_t b_p, std::int64_t a_pX, Reduction red, std::uint64_t p, std::uint64_t ell);

// X survives iff every prime p <= bound with p not dividing l N_Y D is compatible
CandidateReport filter_elliptic(const TraceFunction& t, const std::vector<EllipticCurve>& dataset, std::uint64_t bound,
                                ApMemo* memo = nullptr, unsigned threads = 1);

// nullopt when X carries no minimal discriminant
std::optional<bool> discriminant_filter(const EllipticCurve& X, const TraceFunction& t, std::uint64_t bound);

}  // namespace glue
