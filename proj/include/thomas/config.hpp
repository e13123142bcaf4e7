#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thomas {

// Work bounds for the decomposition algorithms. Exceeding any of them raises
// ResourceLimitError; callers map that to exit code 3.
struct Config {
    int max_order = 50;           // highest derivative order a DerVar may reach
    std::size_t max_systems = 10000;  // pending-queue cap of the decomposition
    std::size_t max_steps = 2000000;  // total member-processing steps across all branches
    int max_aux_depth = 8;        // nesting cap for auxiliary consistency decompositions
};

// Diagnostic logging to stderr, enabled by setting THOMAS_TRACE in the
// environment. Checked once per process.
bool trace_enabled();

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace thomas
