#pragma once

#include "rank2/combinat.hpp"
#include "rank2/laurent.hpp"
#include "rank2/limits.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rank2 {

/// x_index by iterating x_{k+1} x_{k-1} = x_k^r + 1 with exact division, in
/// either direction from (x_1, x_2). Valid for every r >= 1.
LaurentPoly2 oracle(int r, std::int64_t index, const Limits& limits = {});

struct ClusterVariable {
    int r = 0;
    std::int64_t index = 0;
    LaurentPoly2 value;
};

/// x_index from the path formula for |index| large enough, the closed forms
/// for index in {0, 1, 2, 3}, and the variable swap for index <= -1. Needs r >= 2.
ClusterVariable cluster_variable(int r, std::int64_t index, const Limits& limits = {});

/// Rewrites a generating polynomial sum y1^a y2^b into
/// x1^(r b - c_{n-1}) x2^(r (c_{n-1} - a) - c_{n-2}).
LaurentPoly2 substitute_generating(const LaurentPoly2& generating, int r, std::int64_t c_n1,
                                   std::int64_t c_n2);

struct GVector {
    std::int64_t g1 = 0;
    std::int64_t g2 = 0;

    friend bool operator==(const GVector&, const GVector&) = default;
};

/// For indices 1 and 2 this returns the initial-seed convention (1,0), (0,1).
GVector g_vector(int r, std::int64_t index, const Limits& limits = {});

/// F-polynomial in (y1, y2). Needs index >= 3 or index <= 0.
LaurentPoly2 f_polynomial(int r, std::int64_t index, const Limits& limits = {});

enum class EulerSign { Positive, Negative };

/// Euler characteristics of the quiver Grassmannians of M(n) (Positive) or
/// M(3-n) (Negative), dense over the bounding rectangle.
struct EulerTable {
    EulerSign sign = EulerSign::Positive;
    int r = 0;
    int n = 0;
    std::int64_t e1_max = 0;
    std::int64_t e2_max = 0;
    std::map<std::pair<std::int64_t, std::int64_t>, mpz_class> entries;

    mpz_class at(std::int64_t e1, std::int64_t e2) const;
    mpz_class total() const;
};

EulerTable euler_table(int r, int n, EulerSign sign, const Limits& limits = {});

/// Header "e1,e2,chi", rows sorted by (e1, e2), zeros included.
std::string euler_csv(const EulerTable& table);

enum class VerifyStatus { Pass, Fail, Skipped };

struct VerifyEntry {
    int r = 0;
    int n = 0;
    VerifyStatus status = VerifyStatus::Pass;
    std::int64_t millis = 0;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    std::vector<std::string> notes;

    bool ok() const;
    std::size_t count(VerifyStatus status) const;
    /// One {"r":..,"n":..,"status":"pass|fail|skipped","millis":..} per line.
    std::string to_jsonl() const;
};

/// Compares the formula with the oracle for x_n and x_{3-n} over
/// 2 <= r <= r_max, n >= 4, r + n <= sum_cap. Pairs that exceed the
/// configuration budget are reported as skipped. limits.threads pairs run
/// concurrently; the report is sorted by (r, n).
VerifyReport verify_range(int r_max, int sum_cap, const Limits& limits = {});

}  // namespace rank2
