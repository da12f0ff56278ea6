#pragma once

#include <stdexcept>
#include <string>

namespace dp5 {

// Base class for every error this library throws on bad input.
// Internal impossibilities use assertions instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
    using Error::Error;
};
struct ParityError : Error {
    using Error::Error;
};
struct IndexError : Error {
    using Error::Error;
};
struct UnsupportedSurfaceError : Error {
    using Error::Error;
};
struct UnsupportedClassError : Error {
    using Error::Error;
};
struct OracleInapplicableError : Error {
    using Error::Error;
};
struct NotRationalError : Error {
    using Error::Error;
};
struct InvalidBranchError : Error {
    using Error::Error;
};
struct NotABidoubleError : Error {
    using Error::Error;
};
struct SymbolError : Error {
    using Error::Error;
};
struct PoleEvaluationError : Error {
    using Error::Error;
};
struct InvalidActionError : Error {
    using Error::Error;
};
struct IncompleteDataError : Error {
    using Error::Error;
};
struct InconsistencyError : Error {
    using Error::Error;
};

// Scenario / CLI configuration problems (bad file, missing section, ...).
struct ConfigError : Error {
    using Error::Error;
};

struct ParseError : ConfigError {
    int line;
    ParseError(int line_, const std::string& msg)
        : ConfigError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

} // namespace dp5
