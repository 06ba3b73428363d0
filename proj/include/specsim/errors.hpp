#pragma once

#include <stdexcept>
#include <string>

namespace specsim {

// Error categories map one-to-one onto CLI exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; carries the offending line when known.
struct ParseError : Error {
    explicit ParseError(const std::string& what, long line = -1)
        : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what), line(line) {}
    long line;
};

// Violated operation precondition (bad parameter, degenerate input,
// out-of-coverage query, unmet hypothesis).
struct PreconditionError : Error {
    using Error::Error;
};

// Symbol outside the expected alphabet.
struct AlphabetError : Error {
    using Error::Error;
};

// Example parameter set violates its ordering constraint.
struct ConstraintError : Error {
    using Error::Error;
};

}  // namespace specsim
