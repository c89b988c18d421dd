#pragma once

#include <stdexcept>
#include <string>

namespace weilrep {

/// All library failures carry a short stable code (e.g. "NotPurelyInseparable")
/// next to the human-readable message, so callers can branch without string
/// matching on free text.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool cond, const char* code, const std::string& msg) {
    if (!cond) throw Error(code, msg);
}

} // namespace weilrep
