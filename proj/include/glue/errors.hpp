#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glue {

// precondition violated by the caller
struct invalid_argument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// model has bad reduction at `prime`
struct bad_reduction : std::runtime_error {
    std::uint64_t prime;
    bad_reduction(std::uint64_t p, const std::string& what)
        : std::runtime_error(what), prime(p) {}
};

// something that must hold mathematically did not -- a bug, not bad input
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// torsion basis does not span what it claims to
struct basis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    std::vector<std::pair<std::size_t, std::string>> lines;  // (line number, reason)
    parse_error(const std::string& what, std::vector<std::pair<std::size_t, std::string>> l)
        : std::runtime_error(what), lines(std::move(l)) {}
};

}  // namespace glue
