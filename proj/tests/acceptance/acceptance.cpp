// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "rank2/cluster.hpp"
#include "rank2/combinat.hpp"
#include "rank2/dyck.hpp"
#include "rank2/error.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

using namespace rank2;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned worker_count() { return std::max(1U, std::thread::hardware_concurrency()); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

// Runs jobs[0..count) on a small pool; jobs must be independent.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& job) {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const auto threads = std::min<std::size_t>(worker_count(), count);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                job(i);
            }
        });
    }
}

std::string pair_name(int r, int n) { return "(" + std::to_string(r) + "," + std::to_string(n) + ")"; }

std::vector<std::pair<int, int>> pairs_up_to(int sum_cap) {
    std::vector<std::pair<int, int>> pairs;
    for (int r = 2; r + 4 <= sum_cap; ++r) {
        for (int n = 4; r + n <= sum_cap; ++n) {
            pairs.emplace_back(r, n);
        }
    }
    return pairs;
}

// Formula values over the r + n <= 10 sweep, shared by several criteria.
struct Sweep {
    std::map<std::pair<int, int>, LaurentPoly2> positive;
    std::map<std::pair<int, int>, LaurentPoly2> negative;
};

Sweep compute_sweep() {
    Sweep sweep;
    const auto pairs = pairs_up_to(10);
    std::vector<LaurentPoly2> pos(pairs.size());
    std::vector<LaurentPoly2> neg(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t j) {
        pos[j] = cluster_variable(pairs[j].first, pairs[j].second).value;
        neg[j] = cluster_variable(pairs[j].first, 3 - pairs[j].second).value;
    });
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        sweep.positive[pairs[j]] = std::move(pos[j]);
        sweep.negative[pairs[j]] = std::move(neg[j]);
    }
    return sweep;
}

Outcome reproduce_r3_n5() {
    Outcome o;
    const auto start = Clock::now();
    const auto x5 = cluster_variable(3, 5).value;
    const double elapsed = seconds_since(start);

    const auto& printed = testing::r3_n5_numerator_terms();
    if (x5.size() != printed.size()) {
        o.fail("expected 19 terms, got " + std::to_string(x5.size()));
    }
    for (const auto& t : printed) {
        if (x5.coefficient({t.e1 - 8, t.e2 - 3}) != t.c) {
            o.fail("coefficient mismatch at x1^" + std::to_string(t.e1 - 8) + " x2^" + std::to_string(t.e2 - 3));
        }
    }
    if (x5 != testing::r3_n5_numerator() * LaurentPoly2::monomial({-8, -3})) {
        o.fail("polynomial differs");
    }
    if (elapsed >= 1.0) {
        o.fail("took " + std::to_string(elapsed) + " s");
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("19 terms exact, ") + std::to_string(elapsed * 1000) +
                " ms";
    return o;
}

Outcome oracle_sweep() {
    Outcome o;
    Limits limits;
    limits.threads = worker_count();

    const auto start = Clock::now();
    const auto base = verify_range(6, 10, limits);
    const double elapsed = seconds_since(start);
    for (const auto& e : base.entries) {
        if (e.status != VerifyStatus::Pass) {
            o.fail(pair_name(e.r, e.n) + " did not pass: " + e.detail);
        }
    }
    if (elapsed > 300.0) {
        o.fail("r+n<=10 sweep took " + std::to_string(elapsed) + " s");
    }

    // Extension to r + n = 11: cells over the configuration budget are
    // reported as skipped, never counted as passed.
    const auto ext_start = Clock::now();
    const auto extended = verify_range(7, 11, limits);
    std::size_t ext_pass = 0;
    std::vector<std::string> skipped;
    for (const auto& e : extended.entries) {
        if (e.r + e.n != 11) {
            continue;
        }
        switch (e.status) {
            case VerifyStatus::Pass: ++ext_pass; break;
            case VerifyStatus::Skipped: skipped.push_back(pair_name(e.r, e.n)); break;
            case VerifyStatus::Fail: o.fail(pair_name(e.r, e.n) + " failed: " + e.detail); break;
        }
    }
    std::ostringstream msg;
    msg << base.entries.size() << " pairs with r+n<=10 exact (x_n and x_{3-n}) in " << elapsed << " s; r+n=11: "
        << ext_pass << " passed";
    if (!skipped.empty()) {
        msg << ", skipped under configuration budget:";
        for (const auto& s : skipped) {
            msg << ' ' << s;
        }
    }
    msg << " (" << seconds_since(ext_start) << " s)";
    if (o.pass) {
        o.detail = msg.str();
    } else {
        o.detail += "; " + msg.str();
    }
    return o;
}

Outcome bruteforce_agreement() {
    Outcome o;
    std::vector<std::pair<int, int>> pairs;
    for (int r = 2; r <= 22; ++r) {
        for (int n = 4;; ++n) {
            const auto c = c_sequence(r, n);
            if (c(n - 1) > 22) {
                break;
            }
            pairs.emplace_back(r, n);
        }
    }
    // Largest first so the long r = 2 cells start early.
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        return build_path(a.first, a.second).edge_count() > build_path(b.first, b.second).edge_count();
    });

    std::mutex mu;
    std::string first_failure;
    mpz_class f5;
    const auto start = Clock::now();
    parallel_for(pairs.size(), [&](std::size_t j) {
        const auto [r, n] = pairs[j];
        const auto path = build_path(r, n);
        const auto brute = bruteforce_poly(path);
        const auto gen = generating_poly(path);
        std::lock_guard lock(mu);
        if (brute != gen && first_failure.empty()) {
            first_failure = pair_name(r, n);
        }
        if (r == 3 && n == 5) {
            f5 = eval_at(gen, 1, 1).get_num();
            if (eval_at(brute, 1, 1) != 365) {
                first_failure = "(3,5) brute-force count";
            }
        }
    });
    if (!first_failure.empty()) {
        o.fail("mismatch at " + first_failure);
    }
    if (f5 != 365) {
        o.fail("F_5(1,1) = " + f5.get_str());
    }
    if (o.pass) {
        std::ostringstream msg;
        msg << pairs.size() << " pairs with c_{n-1}<=22 agree; (3,5) count 365 (" << seconds_since(start) << " s)";
        o.detail = msg.str();
    }
    return o;
}

Outcome positivity(const Sweep& sweep) {
    Outcome o;
    for (const auto& [key, x] : sweep.positive) {
        const auto [r, n] = key;
        const auto c = c_sequence(r, n);
        std::int64_t lo1 = 0;
        std::int64_t lo2 = 0;
        for (const auto* p : {&x, &sweep.negative.at(key)}) {
            for (const auto& [e, coef] : p->terms()) {
                if (coef <= 0) {
                    o.fail("non-positive coefficient at " + pair_name(r, n));
                }
            }
        }
        for (const auto& [e, coef] : x.terms()) {
            lo1 = std::min(lo1, e.e1);
            lo2 = std::min(lo2, e.e2);
        }
        if (lo1 != -c(n - 1) || lo2 != -c(n - 2)) {
            o.fail("denominator of " + pair_name(r, n) + " is (" + std::to_string(lo1) + ", " + std::to_string(lo2) + ")");
        }
    }
    if (o.pass) {
        o.detail = std::to_string(sweep.positive.size()) + " pairs: coefficients positive, denominators exact";
    }
    return o;
}

Outcome symmetry(const Sweep& sweep) {
    Outcome o;
    for (const auto& [key, x] : sweep.positive) {
        if (sweep.negative.at(key) != swap_vars(x)) {
            o.fail("x_{3-n} differs from the swap at " + pair_name(key.first, key.second));
        }
    }
    if (o.pass) {
        o.detail = std::to_string(sweep.positive.size()) + " pairs exact";
    }
    return o;
}

Outcome christoffel() {
    Outcome o;
    std::size_t count = 0;
    for (const auto& [r, n] : pairs_up_to(12)) {
        const auto path = build_path(r, n);
        const auto width = path.width();
        const auto height = path.height();
        if (std::string(path.word()) != testing::christoffel_word(height, width)) {
            o.fail("word differs at " + pair_name(r, n));
        }
        const auto pts = path.lattice_points();
        for (std::int64_t p = 0; p < path.edge_count(); ++p) {
            const auto w = pts[static_cast<std::size_t>(p)];
            if (w.y * width > w.x * height) {
                o.fail("vertex above the diagonal at " + pair_name(r, n));
            }
            if (path.step(p + 1) == 'E' && (w.y + 1) * width <= w.x * height) {
                o.fail("not maximal at " + pair_name(r, n));
            }
        }
        ++count;
    }
    if (o.pass) {
        o.detail = std::to_string(count) + " paths with r+n<=12";
    }
    return o;
}

LaurentPoly2 reciprocal(const LaurentPoly2& f, std::int64_t a, std::int64_t b) {
    LaurentPoly2 out;
    for (const auto& [e, c] : f.terms()) {
        out.add_term({a - e.e2, b - e.e1}, c);
    }
    return out;
}

Outcome corollaries() {
    Outcome o;
    if (!(g_vector(3, 5) == GVector{-8, 21})) {
        o.fail("g_vector(3,5)");
    }
    const LaurentPoly2 y1p1{{{1, 0}, 1}, {{0, 0}, 1}};
    for (int r = 2; r <= 12; ++r) {
        if (f_polynomial(r, 3) != y1p1) {
            o.fail("F_3 for r=" + std::to_string(r));
        }
    }
    const auto pairs = pairs_up_to(10);
    std::mutex mu;
    parallel_for(pairs.size(), [&](std::size_t j) {
        const auto [r, n] = pairs[j];
        const auto c = c_sequence(r, n);
        const auto fn = f_polynomial(r, n);
        const auto fm = f_polynomial(r, 3 - n);
        const auto table = euler_table(r, n, EulerSign::Positive);
        const auto total = eval_at(fn, 1, 1);
        std::lock_guard lock(mu);
        if (fm != reciprocal(fn, c(n - 2), c(n - 1))) {
            o.fail("reciprocity at " + pair_name(r, n));
        }
        if (table.at(0, 0) != 1 || table.at(c(n - 1), c(n - 2)) != 1) {
            o.fail("Euler corners at " + pair_name(r, n));
        }
        if (table.total() != total) {
            o.fail("Euler total at " + pair_name(r, n));
        }
    });
    if (o.pass) {
        o.detail = "g(3,5)=(-8,21); F_3=y1+1; reciprocity and Euler tables on " + std::to_string(pairs.size()) + " pairs";
    }
    return o;
}

Outcome lemma_trap() {
    Outcome o;
    const auto pairs = pairs_up_to(12);
    std::atomic<std::size_t> subpaths{0};
    std::mutex mu;
    parallel_for(pairs.size(), [&](std::size_t j) {
        const auto [r, n] = pairs[j];
        try {
            const auto path = build_path(r, n);
            assert_no_late_greens(path);
            subpaths += build_P(path).colored.size();
        } catch (const Error& e) {
            std::lock_guard lock(mu);
            o.fail(pair_name(r, n) + ": " + e.what());
            if (e.kind() == ErrorKind::AmbiguousGreen) {
                std::cerr << "AMBIGUOUS_GREEN observed at " << pair_name(r, n) << ": " << e.what() << '\n';
            }
        }
    });
    if (o.pass) {
        o.detail = std::to_string(pairs.size()) + " paths, " + std::to_string(subpaths.load()) +
                   " subpaths classified, no late or ambiguous greens";
    }
    return o;
}

}  // namespace

int main() {
    using Check = std::function<Outcome()>;
    Sweep sweep;
    bool sweep_ok = true;
    try {
        sweep = compute_sweep();
    } catch (const std::exception& e) {
        sweep_ok = false;
        std::cerr << "sweep failed: " << e.what() << '\n';
    }
    const auto needs_sweep = [&](std::function<Outcome(const Sweep&)> f) -> Check {
        return [&sweep, &sweep_ok, f] {
            if (!sweep_ok) {
                Outcome o;
                o.fail("formula sweep threw");
                return o;
            }
            return f(sweep);
        };
    };

    const std::vector<std::pair<std::string, Check>> criteria{
        {"AC1 r=3 n=5 expansion", reproduce_r3_n5},
        {"AC2 oracle equivalence sweep", oracle_sweep},
        {"AC3 brute force vs aggregate", bruteforce_agreement},
        {"AC4 positivity and denominators", needs_sweep(positivity)},
        {"AC5 swap symmetry", needs_sweep(symmetry)},
        {"AC6 Christoffel words and maximality", christoffel},
        {"AC7 g-vectors, F-polynomials, Euler tables", corollaries},
        {"AC8 no late or ambiguous greens", lemma_trap},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("threw: ") + e.what());
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " : " << o.detail << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
