#pragma once

#include <cstdint>

namespace rank2 {

/// Resource caps shared by every engine. The defaults are small enough that
/// nothing in the test suite can hang.
struct Limits {
    std::int64_t max_exponent = 1'000'000;
    std::int64_t bruteforce_edge_cap = 22;
    std::uint64_t config_budget = 100'000'000;
    unsigned threads = 1;
};

/// Checked integer helpers; throw Error(Overflow) on wrap-around.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace rank2
