#pragma once

#include <stdexcept>
#include <string>

namespace oddgrid {

// Error categories shared between the C++ core and the C API layer.
// Keep the numeric values stable: they are part of the shared library ABI.
enum class ErrorCode : int {
    Ok = 0,
    Param = 1,        // bad argument (range, shape, unknown name)
    Capacity = 2,     // graph or board exceeds the compiled-in vertex cap
    Domain = 3,       // operation not defined for this graph family / input
    Construction = 4, // a constructive routine failed its own verification
    Budget = 5,       // node or time budget exhausted before a proof finished
    Parse = 6,        // malformed catalog text or JSON
    Io = 7,           // file could not be read or written
    Verify = 8,       // a verification predicate reported violations
    Internal = 9,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Ok: return "ok";
        case ErrorCode::Param: return "param";
        case ErrorCode::Capacity: return "capacity";
        case ErrorCode::Domain: return "domain";
        case ErrorCode::Construction: return "construction";
        case ErrorCode::Budget: return "budget";
        case ErrorCode::Parse: return "parse";
        case ErrorCode::Io: return "io";
        case ErrorCode::Verify: return "verify";
        case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

} // namespace oddgrid
