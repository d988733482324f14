#pragma once

#include <stdexcept>
#include <string>

namespace mupoly {

// Error taxonomy. Everything is a std::runtime_error so callers that do not
// care about the distinction can catch one type; the CLI maps input-shaped
// errors to exit code 1 and budget exhaustion to exit code 2.

struct EmptyInput : std::runtime_error {
    explicit EmptyInput(const std::string& m) : std::runtime_error("empty input: " + m) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& m) : std::runtime_error("dimension mismatch: " + m) {}
};

struct NotAVertex : std::runtime_error {
    explicit NotAVertex(const std::string& m) : std::runtime_error("not a vertex: " + m) {}
};

struct NotASimplex : std::runtime_error {
    explicit NotASimplex(const std::string& m) : std::runtime_error("not a simplex: " + m) {}
};

struct NotPointed : std::runtime_error {
    explicit NotPointed(const std::string& m) : std::runtime_error("cone is not pointed: " + m) {}
};

struct Disconnected : std::runtime_error {
    explicit Disconnected(const std::string& m) : std::runtime_error("graph is disconnected: " + m) {}
};

struct BadParameters : std::runtime_error {
    explicit BadParameters(const std::string& m) : std::runtime_error("bad parameters: " + m) {}
};

struct BadInput : std::runtime_error {
    explicit BadInput(const std::string& m) : std::runtime_error("bad input: " + m) {}
};

// Enumeration or search ran past a configured cap. `partial` tells the caller
// how far we got (points seen / subsets tried) for honest reporting.
struct BudgetExceeded : std::runtime_error {
    long long seen;
    explicit BudgetExceeded(const std::string& m, long long seen_ = -1)
        : std::runtime_error("budget exceeded: " + m), seen(seen_) {}
};

// An internal cross-check failed; this always signals an implementation bug,
// never bad user input.
struct ConsistencyViolation : std::logic_error {
    explicit ConsistencyViolation(const std::string& m) : std::logic_error("consistency violation: " + m) {}
};

// A search whose success is mathematically guaranteed came up empty (bug).
struct SearchFailed : std::logic_error {
    explicit SearchFailed(const std::string& m) : std::logic_error("search failed: " + m) {}
};

} // namespace mupoly
