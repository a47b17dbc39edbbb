#pragma once

#include <stdexcept>
#include <string>

namespace esnufft {

enum class errc {
    invalid_parameter = 1,
    domain_error = 2,
    overflow = 3,
    unsupported_size = 4,
    invalid_input = 5,
    truncation_insufficient = 6,
    frequency_too_large = 7,
    numerical_inconsistency = 8,
    internal_error = 9,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const char* what) {
    if (!cond) fail(code, what);
}

}  // namespace esnufft
