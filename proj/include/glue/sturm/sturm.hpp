#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glue/models/curves.hpp"
#include "glue/screen/trace.hpp"

namespace glue {

struct SturmParameters {
    Integer M;  // lcm(N_X, N_Y rad(N_Y))
    Integer B;  // floor(k/12 M prod_{p | M} (1 - 1/p))
    unsigned k = 2;  // 2, or l^2 + 1 when l | N_Y
};

SturmParameters sturm_parameters(const Factorization& NX, const Factorization& NY, std::uint64_t ell);
SturmParameters sturm_parameters(const Integer& NX, const Integer& NY, std::uint64_t ell);

// Verbatim caveat carried by every verdict that substitutes chi for the action on H.
extern const char* const certified_character_caveat;

// --- irreducibility
struct IrreducibilityCertificate {
    bool irreducible = false;  // false = inconclusive, never "reducible"
    std::uint64_t bound = 0;
    // eps (as exponent vector) -> eliminating prime; survivors have no entry
    std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> eliminated;
    std::vector<std::vector<std::uint64_t>> survivors;
};

// eliminates every eps mod D with b_p != eps(p) + p/eps(p) at some good p <= bound
IrreducibilityCertificate certify_irreducible(const TraceFunction& t, std::uint64_t bound);

// --- checkpoint: a_{p,Y} for consecutive primes, line-oriented decimal
//   glue-sturm-checkpoint v1
//   curve <label>
//   f <c0 .. c6>            (coefficients, ascending)
//   h <c0 .. c3>
//   <p> <a_p>               one per line, increasing p
// A file whose header does not match the curve is rejected, not reused.
class ApCheckpoint {
public:
    static constexpr const char* magic = "glue-sturm-checkpoint v1";

    ApCheckpoint() = default;
    ApCheckpoint(std::filesystem::path file, const GenusTwoCurve& Y);

    // records read from disk (empty if none); throws parse_error on a corrupt file
    const std::map<std::uint64_t, std::int64_t>& records() const { return records_; }
    void append(const std::vector<std::pair<std::uint64_t, std::int64_t>>& batch);
    const std::filesystem::path& path() const { return file_; }

private:
    std::filesystem::path file_;
    std::string header_;
    std::map<std::uint64_t, std::int64_t> records_;
};

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, const GenusTwoCurve& Y);

// --- isomorphism proof
struct SturmOptions {
    std::optional<std::uint64_t> bound;  // override B (prefix runs); default from sturm_parameters
    std::optional<std::filesystem::path> checkpoint_dir;
    unsigned threads = 1;
    std::uint64_t batch = 500;  // primes per checkpoint write
    // called after every batch with the last prime done; return false to stop early
    std::function<bool(std::uint64_t)> progress;
};

struct SturmVerdict {
    bool isomorphic = false;
    bool complete = false;  // every prime up to `bound` examined (or a witness found)
    SturmParameters params;
    std::uint64_t bound = 0;
    std::uint64_t primes_checked = 0;
    std::uint64_t last_prime = 0;
    std::optional<std::uint64_t> witness;  // first failing prime
    std::string witness_reason;
    bool chi_trivial = false;
    std::string caveat;
};

// pre: cert.irreducible (else invalid_argument). b_p from trace_b_from.
SturmVerdict prove_isomorphism(const EllipticCurve& X, const TraceFunction& t, const IrreducibilityCertificate& cert,
                               const SturmOptions& opts = {});

}  // namespace glue
