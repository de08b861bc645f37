#include "rank2/error.hpp"

#include "rank2/limits.hpp"

namespace rank2 {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorKind::NonExact: return "NON_EXACT";
        case ErrorKind::Pole: return "POLE";
        case ErrorKind::Overflow: return "OVERFLOW";
        case ErrorKind::CapExceeded: return "CAP_EXCEEDED";
        case ErrorKind::ConfigCap: return "CONFIG_CAP";
        case ErrorKind::AmbiguousGreen: return "AMBIGUOUS_GREEN";
        case ErrorKind::LemmaViolation: return "LEMMA_VIOLATION";
        case ErrorKind::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, "integer overflow in addition");
    }
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
    }
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
    }
    return out;
}

}  // namespace rank2
