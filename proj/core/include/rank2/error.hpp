#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rank2 {

enum class ErrorKind {
    InvalidArgument,
    NonExact,        // exact division left a remainder
    Pole,            // zero raised to a negative power
    Overflow,        // exponent or sequence value beyond the configured cap
    CapExceeded,     // brute-force edge cap
    ConfigCap,       // configuration budget of the aggregated sum
    AmbiguousGreen,  // two (m, w) pairs classify the same subpath
    LemmaViolation,  // a green with m >= n-1 was found
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace rank2
