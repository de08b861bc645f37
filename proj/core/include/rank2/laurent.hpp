#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace rank2 {

/// Exponent pair (e1, e2) of a monomial x1^e1 x2^e2.
struct Exponent {
    std::int64_t e1 = 0;
    std::int64_t e2 = 0;

    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

enum class RenderFormat { Plain, Latex, Json };

/// Variable names used by render(). The default is (x1, x2); F-polynomials use
/// (y1, y2).
struct VariableNames {
    std::string plain1 = "x1";
    std::string plain2 = "x2";
    std::string latex1 = "x_1";
    std::string latex2 = "x_2";

    static VariableNames x() { return {}; }
    static VariableNames y() { return {"y1", "y2", "y_1", "y_2"}; }
};

/// Laurent polynomial in two commuting variables with integer coefficients.
///
/// Terms live in an ordered map keyed by exponent pair, iterated in
/// (e1 descending, e2 descending) order. No stored coefficient is zero, so two
/// polynomials are equal iff their maps are equal.
class LaurentPoly2 {
public:
    using TermMap = std::map<Exponent, mpz_class, std::greater<>>;

    LaurentPoly2() = default;
    LaurentPoly2(long constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly2(std::initializer_list<std::pair<Exponent, long>> terms);

    static LaurentPoly2 monomial(Exponent e, mpz_class c = 1);
    static LaurentPoly2 x1(std::int64_t power = 1) { return monomial({power, 0}); }
    static LaurentPoly2 x2(std::int64_t power = 1) { return monomial({0, power}); }

    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of x1^e.e1 x2^e.e2 (zero when absent).
    mpz_class coefficient(Exponent e) const;

    /// Adds c to the coefficient at e, dropping the term if it cancels.
    void add_term(Exponent e, const mpz_class& c);

    /// Componentwise minimum / maximum exponents. Undefined for zero.
    Exponent min_exponent() const;
    Exponent max_exponent() const;

    LaurentPoly2& operator+=(const LaurentPoly2& q);
    LaurentPoly2& operator-=(const LaurentPoly2& q);
    LaurentPoly2& operator*=(const LaurentPoly2& q);

    friend LaurentPoly2 operator+(LaurentPoly2 p, const LaurentPoly2& q) { return p += q; }
    friend LaurentPoly2 operator-(LaurentPoly2 p, const LaurentPoly2& q) { return p -= q; }
    friend LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q);
    friend LaurentPoly2 operator-(LaurentPoly2 p);

    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

    /// Multiplies by the monomial x1^shift.e1 x2^shift.e2.
    LaurentPoly2 shifted(Exponent shift) const;

private:
    TermMap terms_;
};

LaurentPoly2 add(const LaurentPoly2& p, const LaurentPoly2& q);
LaurentPoly2 mul(const LaurentPoly2& p, const LaurentPoly2& q);
LaurentPoly2 pow(const LaurentPoly2& p, unsigned k);

/// Returns t with t * q == p exactly. Throws Error(NonExact) if no Laurent
/// polynomial t exists and Error(InvalidArgument) if q is zero.
LaurentPoly2 div_exact(const LaurentPoly2& p, const LaurentPoly2& q);

/// Exact value at (a1, a2). Throws Error(Pole) when a zero base meets a
/// negative exponent.
mpq_class eval_at(const LaurentPoly2& p, const mpq_class& a1, const mpq_class& a2);

/// (e1, e2) -> (e2, e1) on every term.
LaurentPoly2 swap_vars(const LaurentPoly2& p);

/// Splits p into (numerator, denominator exponent) with p = numerator /
/// x1^d.e1 x2^d.e2, numerator a polynomial and d >= 0 minimal.
std::pair<LaurentPoly2, Exponent> split_denominator(const LaurentPoly2& p);

std::string render(const LaurentPoly2& p, RenderFormat format,
                   const VariableNames& names = VariableNames::x());

/// Inverse of render(p, Json). Throws Error(InvalidArgument) on malformed input.
LaurentPoly2 from_json(std::string_view text);

}  // namespace rank2
