#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace acm {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid graph construction: loops, parallel edges, endpoints out of range.
struct GraphError : Error {
    using Error::Error;
};

// A matching violates its invariants or does not fit the host graph.
struct MatchingError : Error {
    using Error::Error;
};

// Input fails a documented precondition (restricted CNF form, assignment
// length, ...).
struct ValidationError : Error {
    using Error::Error;
};

// A configured size guard was exceeded. Guards are configuration, never
// silent truncation.
struct ResourceLimitError : Error {
    using Error::Error;
};

// A bounded randomized generator exhausted its retry budget.
struct GenerationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no);
};

// The graph is not P4-free; carries an induced P4 in path order.
struct NotCographError : Error {
    std::array<int, 4> witness;
    explicit NotCographError(const std::array<int, 4>& p4);
};

// The graph is not 2P3-free; carries two vertex triples each inducing a P3
// with no edges between them.
struct NotTwoP3FreeError : Error {
    std::array<int, 6> witness;
    explicit NotTwoP3FreeError(const std::array<int, 6>& pattern);
};

// CNF that the normalization rules cannot bring into the restricted form.
struct NotNormalizableError : Error {
    using Error::Error;
};

}  // namespace acm
