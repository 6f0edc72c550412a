#pragma once

#include <stdexcept>
#include <string>

namespace iiq {

// Error categories. The numeric values of `precondition`, `violation` and
// `parse` double as CLI exit codes.
enum class Errc {
    violation = 1,      // a checked mathematical invariant failed
    precondition = 2,   // caller violated an operation contract
    parse = 3,          // malformed input document
    not_split = 4,      // semisimple part not recognized as split over the base field
    unsupported_characteristic = 5,
    reduction_failed = 6,  // layered conjugator solve infeasible; carries a repro payload
    internal = 7,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, const std::string& msg, Errc code = Errc::precondition) {
    if (!cond) fail(code, msg);
}

}  // namespace iiq
