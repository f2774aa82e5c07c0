#pragma once
/* Error taxonomy: precondition_error = caller handed us bad input (CLI exit 1),
   invariant_error = an internally guaranteed identity failed (CLI exit 2). */

#include <stdexcept>
#include <string>

namespace ncx {

struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw invariant_error(msg);
}

}  // namespace ncx
