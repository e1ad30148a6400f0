// Univariate polynomials over the rationals.
#pragma once

#include "univadj/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace univadj {

/// Raised when an operation receives a coefficient it cannot work with
/// (zero scale in a substitution, zero leading coefficient, ...).
class InvalidCoefficient : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by `divide_exact` when the divisor does not divide.
class NonzeroRemainder : public std::domain_error {
public:
    NonzeroRemainder(const std::string& what, Rational remainder)
        : std::domain_error(what), remainder_(std::move(remainder)) {}

    const Rational& remainder() const noexcept { return remainder_; }

private:
    Rational remainder_;
};

/// Dense polynomial with coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

    Polynomial(std::initializer_list<long> ascending) {
        coeffs_.reserve(ascending.size());
        for (long c : ascending) {
            coeffs_.emplace_back(c);
        }
        trim();
    }

    static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

    /// The indeterminate x.
    static Polynomial x() { return Polynomial({0, 1}); }

    /// x - root
    static Polynomial linear_factor(const Rational& root) { return Polynomial(std::vector<Rational>{-root, Rational(1)}); }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    /// Coefficient of x^k (zero past the degree).
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    const Rational& leading() const {
        if (is_zero()) {
            throw InvalidCoefficient("zero polynomial has no leading coefficient");
        }
        return coeffs_.back();
    }

    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    bool has_integer_coefficients() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
    }

    Rational eval(const Rational& at) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * at + *it;
        }
        return acc;
    }

    /// Sign of p(at) without building the full value twice.
    int sign_at(const Rational& at) const { return sgn(eval(at)); }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) {
            return {};
        }
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
        }
        return Polynomial(std::move(out));
    }

    Polynomial monic() const {
        if (is_zero()) {
            return {};
        }
        return scaled(Rational(1) / leading());
    }

    Polynomial scaled(const Rational& c) const {
        if (c == 0) {
            return {};
        }
        std::vector<Rational> out(coeffs_);
        for (auto& v : out) {
            v *= c;
        }
        return Polynomial(std::move(out));
    }

    /// Multiplies by x^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) {
            return {};
        }
        std::vector<Rational> out(k, Rational(0));
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
            coeffs_[k] += rhs.coeffs_[k];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
            coeffs_[k] -= rhs.coeffs_[k];
        }
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator-(const Polynomial& p) { return p.scaled(Rational(-1)); }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) {
            return {};
        }
        std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            if (lhs.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg d.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
        if (den.is_zero()) {
            throw InvalidCoefficient("polynomial division by zero");
        }
        if (num.degree() < den.degree()) {
            return {Polynomial{}, num};
        }
        std::vector<Rational> rem(num.coeffs_);
        const std::size_t dd = den.coeffs_.size() - 1;
        std::vector<Rational> quot(rem.size() - dd, Rational(0));
        const Rational inv_lead = Rational(1) / den.coeffs_.back();
        for (std::size_t k = quot.size(); k-- > 0;) {
            Rational q = rem[k + dd] * inv_lead;
            if (q != 0) {
                for (std::size_t j = 0; j <= dd; ++j) {
                    rem[k + j] -= q * den.coeffs_[j];
                }
            }
            quot[k] = std::move(q);
        }
        rem.resize(dd);
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// p(a*x + b).
inline Polynomial compose_linear(const Polynomial& p, const Rational& a, const Rational& b) {
    const Polynomial lin(std::vector<Rational>{b, a});
    Polynomial acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * lin + Polynomial::constant(*it);
    }
    return acc;
}

/// a^m * p((x - b) / a) for p monic of degree m. The result is monic of
/// degree m: if p has roots r_k, the result has roots a*r_k + b.
inline Polynomial affine_transform(const Polynomial& p, const Rational& a, const Rational& b) {
    if (a == 0) {
        throw InvalidCoefficient("affine_transform: scale must be nonzero");
    }
    if (!p.is_monic()) {
        throw InvalidCoefficient("affine_transform: polynomial must be monic");
    }
    // shifted(y) = p(y - b/a), so the result is a^m * shifted(x/a): the x^k
    // coefficient of shifted gets multiplied by a^(m-k).
    const Polynomial shifted = compose_linear(p, Rational(1), -b / a);
    const auto& c = shifted.coefficients();
    const std::size_t m = c.size() - 1;
    std::vector<Rational> out(c.size());
    Rational power = 1;  // a^(m-k), built from k = m downwards
    for (std::size_t k = m + 1; k-- > 0;) {
        out[k] = c[k] * power;
        power *= a;
    }
    return Polynomial(std::move(out));
}

/// Synthetic division by (x - root). Throws NonzeroRemainder if root is not
/// a root of p.
inline Polynomial divide_exact(const Polynomial& p, const Rational& root) {
    if (p.is_zero()) {
        return {};
    }
    const auto& c = p.coefficients();
    const std::size_t m = c.size() - 1;
    if (m == 0) {
        throw NonzeroRemainder("divide_exact: constant polynomial has no roots", c[0]);
    }
    std::vector<Rational> q(m);
    Rational carry = c[m];
    for (std::size_t k = m; k-- > 0;) {
        q[k] = carry;
        carry = c[k] + carry * root;
    }
    if (carry != 0) {
        throw NonzeroRemainder("divide_exact: " + to_string(root) + " is not a root (remainder " + to_string(carry) + ")",
                               carry);
    }
    return Polynomial(std::move(q));
}

/// Product of (x - r) over the given roots.
inline Polynomial from_roots(const std::vector<Rational>& roots) {
    Polynomial acc = Polynomial::constant(Rational(1));
    for (const auto& r : roots) {
        acc *= Polynomial::linear_factor(r);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Text forms

/// Ascending coefficient list: "c0 c1 ... cm"; "0" for the zero polynomial.
inline std::string to_coefficient_string(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& c : p.coefficients()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += to_string(c);
    }
    return out;
}

/// Human form, descending: "x^3 - 3*x - 2", "3/2*x^2 + 1", "0".
inline std::string to_human_string(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) {
            continue;
        }
        const bool negative = sgn(c[k]) < 0;
        if (out.empty()) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = abs(c[k]);
        std::string mono;
        if (k == 1) {
            mono = "x";
        } else if (k > 1) {
            mono = "x^" + std::to_string(k);
        }
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_human_string(p); }

/// Inverse of to_coefficient_string. Whitespace-separated rationals.
inline Polynomial parse_coefficient_string(std::string_view text) {
    std::vector<Rational> coeffs;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) {
            ++i;
        }
        if (i == text.size()) {
            break;
        }
        std::size_t j = i;
        while (j < text.size() && !(text[j] == ' ' || text[j] == '\t' || text[j] == '\n' || text[j] == '\r')) {
            ++j;
        }
        coeffs.push_back(parse_rational(text.substr(i, j - i), i));
        i = j;
    }
    if (coeffs.empty()) {
        throw ParseError("empty coefficient list", 0);
    }
    return Polynomial(std::move(coeffs));
}

/// Inverse of to_human_string. Accepts terms of the form [coef][*]x[^k]
/// joined by + or -, with arbitrary spaces. Like terms are summed.
inline Polynomial parse_human_string(std::string_view text) {
    std::vector<Rational> coeffs;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
            ++i;
        }
    };
    auto read_digits = [&] {
        const std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            ++i;
        }
        return text.substr(start, i - start);
    };
    bool first = true;
    skip_ws();
    if (i == text.size()) {
        throw ParseError("empty polynomial", 0);
    }
    while (true) {
        skip_ws();
        if (i == text.size()) {
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", i);
        }
        first = false;
        Rational coef = 1;
        bool have_coef = false;
        if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            const std::size_t start = i;
            read_digits();
            if (i < text.size() && text[i] == '/') {
                ++i;
                if (read_digits().empty()) {
                    throw ParseError("missing denominator", i);
                }
            }
            coef = parse_rational(text.substr(start, i - start), start);
            have_coef = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
                if (i == text.size() || text[i] != 'x') {
                    throw ParseError("expected 'x' after '*'", i);
                }
            }
        }
        std::size_t power = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            power = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                const std::size_t at = i;
                auto digits = read_digits();
                if (digits.empty()) {
                    throw ParseError("missing exponent", at);
                }
                power = std::stoul(std::string(digits));
            }
        } else if (!have_coef) {
            throw ParseError("expected a term", i);
        }
        if (coeffs.size() <= power) {
            coeffs.resize(power + 1);
        }
        coeffs[power] += sign * coef;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace univadj
