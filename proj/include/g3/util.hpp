#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace g3 {

// Library-wide error type.  `kind` tells callers (and the CLI exit-code
// mapping) whether the failure is bad input, a violated precondition, or an
// exhausted search budget.
struct Error : std::runtime_error {
    enum class Kind {
        Parse,         // malformed input text
        Precondition,  // operation called outside its contract
        Budget,        // search budget exhausted before an answer was reached
        NotFound,      // requested object does not exist
        Usage,         // bad CLI arguments
    };

    Kind kind;

    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(Error::Kind k, const std::string& msg) {
    throw Error(k, msg);
}

inline uint64_t fnv1a64(const void* data, size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string hex64(uint64_t v);

}  // namespace g3
