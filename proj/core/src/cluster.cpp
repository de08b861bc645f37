#include "rank2/cluster.hpp"

#include "rank2/dyck.hpp"
#include "rank2/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace rank2 {

namespace {

void check_exponents(const LaurentPoly2& p, const Limits& limits, std::int64_t index) {
    if (p.is_zero()) {
        return;
    }
    const auto lo = p.min_exponent();
    const auto hi = p.max_exponent();
    const auto worst = std::max({std::abs(lo.e1), std::abs(lo.e2), std::abs(hi.e1), std::abs(hi.e2)});
    if (worst > limits.max_exponent) {
        throw Error(ErrorKind::Overflow, "x_" + std::to_string(index) + " has an exponent of size " +
                                             std::to_string(worst) + " beyond the cap " +
                                             std::to_string(limits.max_exponent));
    }
}

void require_formula_r(int r) {
    if (r < 2) {
        throw Error(ErrorKind::InvalidArgument,
                    "the path formula requires r >= 2 (got r = " + std::to_string(r) + "); use the oracle");
    }
}

int to_path_index(std::int64_t n) {
    if (n > 1'000'000) {
        throw Error(ErrorKind::Overflow, "index " + std::to_string(n) + " is out of range");
    }
    return static_cast<int>(n);
}

// x_3 = (x_2^r + 1) / x_1 and x_0 = (x_1^r + 1) / x_2.
LaurentPoly2 first_mutation(int r, bool forward) {
    const auto ur = static_cast<std::int64_t>(r);
    return forward ? LaurentPoly2{{{-1, ur}, 1}, {{-1, 0}, 1}} : LaurentPoly2{{{ur, -1}, 1}, {{0, -1}, 1}};
}

}  // namespace

LaurentPoly2 oracle(int r, std::int64_t index, const Limits& limits) {
    if (r < 1) {
        throw Error(ErrorKind::InvalidArgument, "the recursion needs r >= 1");
    }
    LaurentPoly2 a = LaurentPoly2::x1();
    LaurentPoly2 b = LaurentPoly2::x2();
    if (index == 1) {
        return a;
    }
    if (index == 2) {
        return b;
    }
    const auto ur = static_cast<unsigned>(r);
    if (index > 2) {
        // (a, b) = (x_{k-1}, x_k)
        for (std::int64_t k = 2; k < index; ++k) {
            LaurentPoly2 next = div_exact(pow(b, ur) + 1, a);
            check_exponents(next, limits, k + 1);
            a = std::move(b);
            b = std::move(next);
        }
        return b;
    }
    // (a, b) = (x_k, x_{k+1})
    for (std::int64_t k = 1; k > index; --k) {
        LaurentPoly2 prev = div_exact(pow(a, ur) + 1, b);
        check_exponents(prev, limits, k - 1);
        b = std::move(a);
        a = std::move(prev);
    }
    return a;
}

LaurentPoly2 substitute_generating(const LaurentPoly2& generating, int r, std::int64_t c_n1,
                                   std::int64_t c_n2) {
    LaurentPoly2 out;
    for (const auto& [e, c] : generating.terms()) {
        const std::int64_t a = e.e1;  // |beta|_2
        const std::int64_t b = e.e2;  // |beta|_1
        out.add_term({checked_sub(checked_mul(r, b), c_n1), checked_sub(checked_mul(r, c_n1 - a), c_n2)}, c);
    }
    return out;
}

ClusterVariable cluster_variable(int r, std::int64_t index, const Limits& limits) {
    require_formula_r(r);
    ClusterVariable var{r, index, {}};
    if (index == 1) {
        var.value = LaurentPoly2::x1();
    } else if (index == 2) {
        var.value = LaurentPoly2::x2();
    } else if (index == 3) {
        var.value = first_mutation(r, true);
    } else if (index == 0) {
        var.value = first_mutation(r, false);
    } else if (index >= 4) {
        const int n = to_path_index(index);
        const auto path = build_path(r, n, limits);
        assert_no_late_greens(path);
        const auto gen = generating_poly(path, {}, limits);
        var.value = substitute_generating(gen, r, path.c()(n - 1), path.c()(n - 2));
    } else {
        var.value = swap_vars(cluster_variable(r, 3 - index, limits).value);
    }
    return var;
}

GVector g_vector(int r, std::int64_t index, const Limits& limits) {
    switch (index) {
        case 1: return {1, 0};
        case 2: return {0, 1};
        case 3: return {-1, r};
        case 0: return {0, -1};
        default: break;
    }
    require_formula_r(r);
    if (index >= 4) {
        const int n = to_path_index(index);
        const auto c = c_sequence(r, n, limits);
        return {-c(n - 1), c(n)};
    }
    const int n = to_path_index(3 - index);
    const auto c = c_sequence(r, n, limits);
    return {-c(n - 2), c(n - 3)};
}

LaurentPoly2 f_polynomial(int r, std::int64_t index, const Limits& limits) {
    if (index == 3) {
        return LaurentPoly2{{{1, 0}, 1}, {{0, 0}, 1}};
    }
    if (index == 0) {
        return LaurentPoly2{{{0, 1}, 1}, {{0, 0}, 1}};
    }
    if (index == 1 || index == 2) {
        throw Error(ErrorKind::InvalidArgument, "F-polynomials are defined here for index >= 3 or <= 0");
    }
    require_formula_r(r);
    const int n = to_path_index(index >= 4 ? index : 3 - index);
    const auto path = build_path(r, n, limits);
    const auto gen = generating_poly(path, {}, limits);
    if (index >= 4) {
        return gen;
    }
    const std::int64_t c_n1 = path.c()(n - 1);
    const std::int64_t c_n2 = path.c()(n - 2);
    LaurentPoly2 out;
    for (const auto& [e, c] : gen.terms()) {
        out.add_term({c_n2 - e.e2, c_n1 - e.e1}, c);
    }
    return out;
}

mpz_class EulerTable::at(std::int64_t e1, std::int64_t e2) const {
    const auto it = entries.find({e1, e2});
    return it == entries.end() ? mpz_class(0) : it->second;
}

mpz_class EulerTable::total() const {
    mpz_class sum = 0;
    for (const auto& [key, chi] : entries) {
        sum += chi;
    }
    return sum;
}

EulerTable euler_table(int r, int n, EulerSign sign, const Limits& limits) {
    require_formula_r(r);
    const auto path = build_path(r, n, limits);
    const auto hist = stats_histogram(path, limits);
    const std::int64_t c_n1 = path.c()(n - 1);
    const std::int64_t c_n2 = path.c()(n - 2);

    EulerTable table;
    table.sign = sign;
    table.r = r;
    table.n = n;
    table.e1_max = sign == EulerSign::Positive ? c_n1 : c_n2;
    table.e2_max = sign == EulerSign::Positive ? c_n2 : c_n1;
    const auto lookup = [&](std::int64_t w1, std::int64_t w2) {
        const auto it = hist.find({w1, w2});
        return it == hist.end() ? mpz_class(0) : it->second;
    };
    for (std::int64_t e1 = 0; e1 <= table.e1_max; ++e1) {
        for (std::int64_t e2 = 0; e2 <= table.e2_max; ++e2) {
            table.entries[{e1, e2}] =
                sign == EulerSign::Positive ? lookup(c_n2 - e2, c_n1 - e1) : lookup(e1, e2);
        }
    }
    return table;
}

std::string euler_csv(const EulerTable& table) {
    std::ostringstream out;
    out << "e1,e2,chi\n";
    for (const auto& [key, chi] : table.entries) {
        out << key.first << ',' << key.second << ',' << chi.get_str() << '\n';
    }
    return out.str();
}

bool VerifyReport::ok() const { return count(VerifyStatus::Fail) == 0; }

std::size_t VerifyReport::count(VerifyStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const VerifyEntry& e) { return e.status == status; }));
}

std::string VerifyReport::to_jsonl() const {
    std::ostringstream out;
    for (const auto& e : entries) {
        const char* status = e.status == VerifyStatus::Pass ? "pass" : e.status == VerifyStatus::Fail ? "fail" : "skipped";
        out << R"({"r":)" << e.r << R"(,"n":)" << e.n << R"(,"status":")" << status << R"(","millis":)"
            << e.millis << "}\n";
    }
    return out.str();
}

namespace {

VerifyEntry verify_pair(int r, int n, const Limits& limits) {
    VerifyEntry entry{r, n, VerifyStatus::Pass, 0, {}};
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto forward = cluster_variable(r, n, limits).value;
        if (forward != oracle(r, n, limits)) {
            entry.status = VerifyStatus::Fail;
            entry.detail = "x_" + std::to_string(n) + " differs from the recursion";
        } else if (swap_vars(forward) != oracle(r, 3 - n, limits)) {
            entry.status = VerifyStatus::Fail;
            entry.detail = "x_" + std::to_string(3 - n) + " differs from the recursion";
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ConfigCap) {
            entry.status = VerifyStatus::Skipped;
        } else {
            entry.status = VerifyStatus::Fail;
        }
        entry.detail = e.what();
    }
    entry.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
    return entry;
}

}  // namespace

VerifyReport verify_range(int r_max, int sum_cap, const Limits& limits) {
    VerifyReport report;
    report.notes.emplace_back("r = 1 excluded: the path formula requires r >= 2 (the oracle alone covers r = 1)");
    std::vector<std::pair<int, int>> pairs;
    for (int r = 2; r <= r_max; ++r) {
        for (int n = 4; r + n <= sum_cap; ++n) {
            pairs.emplace_back(r, n);
        }
    }
    report.entries.resize(pairs.size());

    Limits inner = limits;
    inner.threads = 1;
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++) {
            report.entries[i] = verify_pair(pairs[i].first, pairs[i].second, inner);
        }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(limits.threads, static_cast<unsigned>(pairs.size())));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work);
        }
    }
    for (const auto& e : report.entries) {
        if (e.status == VerifyStatus::Skipped) {
            report.notes.push_back("r=" + std::to_string(e.r) + " n=" + std::to_string(e.n) + " skipped: " + e.detail);
        }
    }
    return report;
}

}  // namespace rank2
