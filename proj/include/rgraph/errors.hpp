#pragma once

#include <stdexcept>
#include <string>

namespace rgraph {

// Every failure the library can report, so callers (and tests) can match on
// the failure class instead of parsing messages.
enum class ErrorKind {
    Parse,          // malformed input text
    InvalidArgument,// out-of-range vertex/edge ids, trivial sets, bad matchings
    Precondition,   // documented operation precondition violated
    Parity,         // odd vertex count where an even one is required
    ResourceLimit,  // brute-force bound exceeded
    Integrity,      // input object is internally inconsistent (corrupted witness)
    Construction,   // construction input does not have the required shape
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parity: return "parity";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::Integrity: return "integrity";
    case ErrorKind::Construction: return "construction";
    }
    return "unknown";
}

class GraphError : public std::runtime_error {
public:
    GraphError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw GraphError(kind, message);
}

} // namespace rgraph
