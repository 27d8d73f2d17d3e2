#pragma once

#include <stdexcept>
#include <string>

namespace sumfree {

struct Error : std::runtime_error {
    enum Kind {
        Parse,        // malformed input text / JSON
        Invalid,      // precondition violated
        Capped,       // enumeration or size cap exceeded
        Unsupported,  // operation not available in this ambient
    };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

}  // namespace sumfree
