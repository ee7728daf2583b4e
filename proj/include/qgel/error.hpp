#pragma once

#include <stdexcept>
#include <string>

namespace qgel {

enum class errc {
    invalid_argument,
    parse,
    validation,
    degree_mismatch,
    range,
    io,
};

// Single exception type for the whole library; the category travels with it
// so the C boundary can map failures to status codes.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace qgel
