#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "glue/models/curves.hpp"

namespace glue {

inline constexpr int report_schema_version = 1;

struct ScanConfig {
    std::optional<std::vector<std::uint64_t>> ells;  // override possible_primes
    std::uint64_t p_bound = 100;        // sieve primes P
    std::uint64_t q_bound = 100;        // character screening primes Q
    std::uint64_t trace_bound = 100;    // b_p table and certificate search
    std::uint64_t filter_bound = 100;
    std::uint64_t witness_bound = 500;  // symplectic witness search
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool filter = true;       // filter_elliptic stage
    bool symplectic = true;   // witness search + symplectic type per survivor
    bool long_mode = false;   // certify_irreducible + prove_isomorphism
    std::optional<std::uint64_t> sturm_bound;  // cap the Sturm range (testing)
    std::optional<std::string> checkpoint_dir;
    bool timing = true;
};

// |z| <= 2^53 as a JSON number, otherwise a decimal string
nlohmann::json json_int(const Integer& z);

// per-task seed: FNV-1a of the task key mixed into the root seed
std::uint64_t derive_seed(std::uint64_t root, const std::string& key);

// the whole workflow; stage errors are recorded in the report, never thrown
nlohmann::json scan(const ScanConfig& config, const std::vector<GenusTwoCurve>& genus2,
                    const std::vector<EllipticCurve>& elliptic);

struct VerifyResult {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

// re-derives every survivor's evidence, every rejection witness, every
// certificate and every symplectic witness from the curves alone
VerifyResult verify_report(const nlohmann::json& report, const std::vector<GenusTwoCurve>& genus2,
                           const std::vector<EllipticCurve>& elliptic);

}  // namespace glue
