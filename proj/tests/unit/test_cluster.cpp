#include "rank2/cluster.hpp"
#include "rank2/error.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace rank2;

namespace {

// F(1/y2, 1/y1) times y1^a y2^b, computed term by term.
LaurentPoly2 reciprocal(const LaurentPoly2& f, std::int64_t a, std::int64_t b) {
    LaurentPoly2 out;
    for (const auto& [e, c] : f.terms()) {
        out += LaurentPoly2::monomial({-e.e2, -e.e1}, c) * LaurentPoly2::monomial({a, b});
    }
    return out;
}

}  // namespace

TEST_SUITE("cluster") {

TEST_CASE("oracle examples") {
    for (int r = 1; r <= 5; ++r) {
        CHECK(oracle(r, 3) == LaurentPoly2{{{-1, r}, 1}, {{-1, 0}, 1}});
        CHECK(oracle(r, 1) == LaurentPoly2::x1());
        CHECK(oracle(r, 2) == LaurentPoly2::x2());
    }
    CHECK(oracle(1, 6) == LaurentPoly2::x1());
    CHECK(oracle(1, 7) == LaurentPoly2::x2());
    CHECK(oracle(1, -4) == LaurentPoly2::x1());
    const LaurentPoly2 x4{{{-2, 3}, 1}, {{-2, 1}, 2}, {{-2, -1}, 1}, {{0, -1}, 1}};
    CHECK(oracle(2, 4) == x4);
    CHECK(oracle(2, 0) == LaurentPoly2{{{2, -1}, 1}, {{0, -1}, 1}});
    CHECK_THROWS_AS(oracle(0, 4), Error);
}

TEST_CASE("cluster_variable reproduces the r=3, n=5 expansion") {
    const auto x5 = cluster_variable(3, 5).value;
    const auto expected = testing::r3_n5_numerator() * LaurentPoly2::monomial({-8, -3});
    CHECK(x5 == expected);
    CHECK(x5.size() == 19);
    CHECK(cluster_variable(3, -2).value == swap_vars(x5));
    CHECK(cluster_variable(2, 4).value == oracle(2, 4));
}

TEST_CASE("cluster_variable small indices") {
    for (int r = 2; r <= 5; ++r) {
        for (int index = -1; index <= 3; ++index) {
            CHECK(cluster_variable(r, index).value == oracle(r, index));
        }
    }
    CHECK_THROWS_AS(cluster_variable(1, 5), Error);
}

TEST_CASE("formula, positivity and denominators") {
    for (int r = 2; r <= 6; ++r) {
        for (int n = 4; r + n <= 9; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            const auto x = cluster_variable(r, n).value;
            CHECK(x == oracle(r, n));
            CHECK(cluster_variable(r, 3 - n).value == oracle(r, 3 - n));
            const auto c = c_sequence(r, n);
            std::int64_t lo1 = 0;
            std::int64_t lo2 = 0;
            for (const auto& [e, coef] : x.terms()) {
                CHECK(coef > 0);
                lo1 = std::min(lo1, e.e1);
                lo2 = std::min(lo2, e.e2);
            }
            CHECK(lo1 == -c(n - 1));
            CHECK(lo2 == -c(n - 2));
        }
    }
}

TEST_CASE("g-vectors") {
    CHECK(g_vector(3, 5) == GVector{-8, 21});
    CHECK(g_vector(3, -2) == GVector{-3, 1});
    CHECK(g_vector(4, 4) == GVector{-4, 15});
    for (int r = 2; r <= 5; ++r) {
        CHECK(g_vector(r, 3) == GVector{-1, r});
        CHECK(g_vector(r, 0) == GVector{0, -1});
        CHECK(g_vector(r, 1) == GVector{1, 0});
        CHECK(g_vector(r, 2) == GVector{0, 1});
    }
}

TEST_CASE("F-polynomials") {
    const LaurentPoly2 y1p1{{{1, 0}, 1}, {{0, 0}, 1}};
    for (int r = 2; r <= 5; ++r) {
        CHECK(f_polynomial(r, 3) == y1p1);
        CHECK(f_polynomial(r, 0) == swap_vars(y1p1));
    }
    CHECK(eval_at(f_polynomial(3, 5), 1, 1) == 365);
    CHECK(f_polynomial(3, -2) == reciprocal(f_polynomial(3, 5), 3, 8));
    CHECK_THROWS_AS(f_polynomial(3, 1), Error);

    for (int r = 2; r <= 6; ++r) {
        for (int n = 4; r + n <= 10; ++n) {
            const auto c = c_sequence(r, n);
            const auto fn = f_polynomial(r, n);
            const auto fm = f_polynomial(r, 3 - n);
            CHECK(fn.coefficient({0, 0}) == 1);
            CHECK(fm.coefficient({0, 0}) == 1);
            CHECK(fm == reciprocal(fn, c(n - 2), c(n - 1)));
        }
    }
}

TEST_CASE("F-polynomial and g-vector recover the cluster variable") {
    // x_n = x^g F(y1, y2) with y1 = x2^-r, y2 = x1^r.
    for (int r = 2; r <= 5; ++r) {
        for (int n = 4; r + n <= 9; ++n) {
            const auto f = f_polynomial(r, n);
            const auto g = g_vector(r, n);
            LaurentPoly2 x;
            for (const auto& [e, c] : f.terms()) {
                x += LaurentPoly2::monomial({g.g1 + r * e.e2, g.g2 - r * e.e1}, c);
            }
            CHECK(x == oracle(r, n));
        }
    }
}

TEST_CASE("Euler tables") {
    const auto pos = euler_table(3, 5, EulerSign::Positive);
    CHECK(pos.at(0, 0) == 1);
    CHECK(pos.at(8, 3) == 1);
    CHECK(pos.total() == 365);
    CHECK(pos.entries.size() == 9 * 4);
    const auto neg = euler_table(3, 5, EulerSign::Negative);
    CHECK(neg.total() == 365);
    CHECK(neg.e1_max == 3);
    CHECK(neg.e2_max == 8);
    const auto csv = euler_csv(pos);
    CHECK(csv.rfind("e1,e2,chi\n0,0,1\n0,1,", 0) == 0);

    for (int r = 2; r <= 5; ++r) {
        for (int n = 4; r + n <= 9; ++n) {
            const auto c = c_sequence(r, n);
            const auto t = euler_table(r, n, EulerSign::Positive);
            CHECK(t.at(0, 0) == 1);
            CHECK(t.at(c(n - 1), c(n - 2)) == 1);
            CHECK(t.total() == eval_at(f_polynomial(r, n), 1, 1));
            for (const auto& [k, chi] : t.entries) {
                CHECK(chi >= 0);
            }
        }
    }
}

TEST_CASE("verify_range") {
    const auto report = verify_range(3, 8);
    CHECK(report.ok());
    CHECK(report.count(VerifyStatus::Pass) == report.entries.size());
    REQUIRE(!report.notes.empty());
    CHECK(report.notes.front().find("r = 1") != std::string::npos);
    CHECK(report.to_jsonl().rfind(R"({"r":2,"n":4,"status":"pass","millis":)", 0) == 0);

    Limits threaded;
    threaded.threads = 3;
    const auto parallel = verify_range(4, 9, threaded);
    CHECK(parallel.ok());
    for (std::size_t j = 1; j < parallel.entries.size(); ++j) {
        const auto& a = parallel.entries[j - 1];
        const auto& b = parallel.entries[j];
        CHECK(std::pair(a.r, a.n) < std::pair(b.r, b.n));
    }

    Limits budget;
    budget.config_budget = 5;
    const auto skipped = verify_range(3, 8, budget);
    CHECK(skipped.ok());
    CHECK(skipped.count(VerifyStatus::Skipped) > 0);
}

}  // TEST_SUITE
