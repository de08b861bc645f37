#include "rank2/laurent.hpp"

#include "rank2/error.hpp"
#include "rank2/limits.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace rank2 {

namespace {

Exponent add_exponents(Exponent a, Exponent b) {
    return {checked_add(a.e1, b.e1), checked_add(a.e2, b.e2)};
}

Exponent negate(Exponent a) { return {checked_sub(0, a.e1), checked_sub(0, a.e2)}; }

mpq_class power(const mpq_class& base, std::int64_t e) {
    if (e == 0) {
        return 1;
    }
    if (base == 0) {
        if (e < 0) {
            throw Error(ErrorKind::Pole, "zero base raised to exponent " + std::to_string(e));
        }
        return 0;
    }
    const auto k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
    mpq_class result = e > 0 ? mpq_class(num, den) : mpq_class(den, num);
    result.canonicalize();
    return result;
}

void append_plain_var(std::string& out, const std::string& name, std::int64_t e) {
    if (e == 0) {
        return;
    }
    if (!out.empty()) {
        out += '*';
    }
    out += name;
    if (e != 1) {
        out += '^';
        out += std::to_string(e);
    }
}

void append_latex_var(std::string& out, const std::string& name, std::int64_t e) {
    if (e == 0) {
        return;
    }
    if (!out.empty()) {
        out += ' ';
    }
    out += name;
    if (e != 1) {
        out += "^{" + std::to_string(e) + "}";
    }
}

// Renders a sum of terms; `monomial` maps an exponent to its variable part
// (empty for the constant monomial) and `joiner` sits between coefficient and
// variables.
template <class MonomialFn>
std::string render_sum(const LaurentPoly2& p, MonomialFn monomial, std::string_view joiner) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const mpz_class magnitude = abs(c);
        const std::string vars = monomial(e);
        if (vars.empty()) {
            out += magnitude.get_str();
        } else if (magnitude == 1) {
            out += vars;
        } else {
            out += magnitude.get_str();
            out += joiner;
            out += vars;
        }
    }
    return out;
}

}  // namespace

LaurentPoly2::LaurentPoly2(long constant) {
    if (constant != 0) {
        terms_.emplace(Exponent{0, 0}, constant);
    }
}

LaurentPoly2::LaurentPoly2(std::initializer_list<std::pair<Exponent, long>> terms) {
    for (const auto& [e, c] : terms) {
        add_term(e, c);
    }
}

LaurentPoly2 LaurentPoly2::monomial(Exponent e, mpz_class c) {
    LaurentPoly2 p;
    p.add_term(e, c);
    return p;
}

mpz_class LaurentPoly2::coefficient(Exponent e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly2::add_term(Exponent e, const mpz_class& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Exponent LaurentPoly2::min_exponent() const {
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        m.e1 = std::min(m.e1, e.e1);
        m.e2 = std::min(m.e2, e.e2);
    }
    return m;
}

Exponent LaurentPoly2::max_exponent() const {
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        m.e1 = std::max(m.e1, e.e1);
        m.e2 = std::max(m.e2, e.e2);
    }
    return m;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& q) {
    for (const auto& [e, c] : q.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& q) {
    for (const auto& [e, c] : q.terms_) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& q) {
    *this = *this * q;
    return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q) {
    LaurentPoly2 result;
    auto& out = result.terms_;
    for (const auto& [ep, cp] : p.terms_) {
        for (const auto& [eq, cq] : q.terms_) {
            auto [it, inserted] = out.try_emplace(add_exponents(ep, eq));
            mpz_addmul(it->second.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
        }
    }
    std::erase_if(out, [](const auto& term) { return term.second == 0; });
    return result;
}

LaurentPoly2 operator-(LaurentPoly2 p) {
    for (auto& [e, c] : p.terms_) {
        c = -c;
    }
    return p;
}

LaurentPoly2 LaurentPoly2::shifted(Exponent shift) const {
    LaurentPoly2 result;
    for (const auto& [e, c] : terms_) {
        result.terms_.emplace_hint(result.terms_.end(), add_exponents(e, shift), c);
    }
    return result;
}

LaurentPoly2 add(const LaurentPoly2& p, const LaurentPoly2& q) { return p + q; }

LaurentPoly2 mul(const LaurentPoly2& p, const LaurentPoly2& q) { return p * q; }

LaurentPoly2 pow(const LaurentPoly2& p, unsigned k) {
    LaurentPoly2 result = 1;
    LaurentPoly2 base = p;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

LaurentPoly2 div_exact(const LaurentPoly2& p, const LaurentPoly2& q) {
    if (q.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
    }
    if (p.is_zero()) {
        return {};
    }
    // Monomials are units: strip them so both sides are polynomials and q has
    // no monomial factor, then run lex-order division.
    const Exponent q_shift = q.min_exponent();
    const Exponent p_shift = p.min_exponent();
    const LaurentPoly2 divisor = q.shifted(negate(q_shift));
    LaurentPoly2 remainder = p.shifted(negate(p_shift));

    const auto& [lead_exp, lead_coef] = *divisor.terms().begin();
    LaurentPoly2 quotient;
    while (!remainder.is_zero()) {
        const auto& [rem_exp, rem_coef] = *remainder.terms().begin();
        const Exponent d{rem_exp.e1 - lead_exp.e1, rem_exp.e2 - lead_exp.e2};
        if (d.e1 < 0 || d.e2 < 0 || !mpz_divisible_p(rem_coef.get_mpz_t(), lead_coef.get_mpz_t())) {
            throw Error(ErrorKind::NonExact, render(p, RenderFormat::Plain) + " is not divisible by " +
                                                 render(q, RenderFormat::Plain));
        }
        const mpz_class c = rem_coef / lead_coef;
        for (const auto& [e, dc] : divisor.terms()) {
            remainder.add_term({e.e1 + d.e1, e.e2 + d.e2}, -c * dc);
        }
        quotient.add_term(d, c);
    }
    return quotient.shifted({checked_sub(p_shift.e1, q_shift.e1), checked_sub(p_shift.e2, q_shift.e2)});
}

mpq_class eval_at(const LaurentPoly2& p, const mpq_class& a1, const mpq_class& a2) {
    mpq_class sum = 0;
    for (const auto& [e, c] : p.terms()) {
        sum += mpq_class(c) * power(a1, e.e1) * power(a2, e.e2);
    }
    return sum;
}

LaurentPoly2 swap_vars(const LaurentPoly2& p) {
    LaurentPoly2 result;
    for (const auto& [e, c] : p.terms()) {
        result.add_term({e.e2, e.e1}, c);
    }
    return result;
}

std::pair<LaurentPoly2, Exponent> split_denominator(const LaurentPoly2& p) {
    if (p.is_zero()) {
        return {p, {0, 0}};
    }
    const Exponent m = p.min_exponent();
    const Exponent den{std::max<std::int64_t>(0, -m.e1), std::max<std::int64_t>(0, -m.e2)};
    return {p.shifted(den), den};
}

std::string render(const LaurentPoly2& p, RenderFormat format, const VariableNames& names) {
    switch (format) {
        case RenderFormat::Plain:
            return render_sum(
                p,
                [&](Exponent e) {
                    std::string s;
                    append_plain_var(s, names.plain1, e.e1);
                    append_plain_var(s, names.plain2, e.e2);
                    return s;
                },
                "*");
        case RenderFormat::Latex: {
            auto latex_monomial = [&](Exponent e) {
                std::string s;
                append_latex_var(s, names.latex1, e.e1);
                append_latex_var(s, names.latex2, e.e2);
                return s;
            };
            const auto [numerator, den] = split_denominator(p);
            if (den.e1 == 0 && den.e2 == 0) {
                return render_sum(p, latex_monomial, " ");
            }
            return "\\frac{" + render_sum(numerator, latex_monomial, " ") + "}{" + latex_monomial(den) +
                   "}";
        }
        case RenderFormat::Json: {
            std::ostringstream out;
            out << R"({"terms":[)";
            bool first = true;
            for (const auto& [e, c] : p.terms()) {
                out << (first ? "" : ",") << R"({"e1":)" << e.e1 << R"(,"e2":)" << e.e2 << R"(,"c":")"
                    << c.get_str() << "\"}";
                first = false;
            }
            out << "]}";
            return out.str();
        }
    }
    throw Error(ErrorKind::Internal, "unknown render format");
}

LaurentPoly2 from_json(std::string_view text) {
    LaurentPoly2 p;
    try {
        const auto doc = nlohmann::json::parse(text);
        for (const auto& term : doc.at("terms")) {
            const mpz_class c(term.at("c").get<std::string>(), 10);
            p.add_term({term.at("e1").get<std::int64_t>(), term.at("e2").get<std::int64_t>()}, c);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed polynomial JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorKind::InvalidArgument, "malformed coefficient in polynomial JSON");
    }
    return p;
}

}  // namespace rank2
