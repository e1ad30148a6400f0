// Exact rational scalars backed by GMP.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace univadj {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Every constructor path below canonicalizes.
using Rational = mpq_class;

/// Raised for malformed textual input (numbers, polynomials, tuples, graphs).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q" with optional leading sign. No whitespace allowed.
inline Rational parse_rational(std::string_view text, std::size_t base_offset = 0) {
    if (text.empty()) {
        throw ParseError("empty number", base_offset);
    }
    const auto slash = text.find('/');
    auto check_int = [&](std::string_view part, std::size_t off, bool allow_sign) {
        if (part.empty()) {
            throw ParseError("missing digits", base_offset + off);
        }
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) {
            i = 1;
        }
        if (i == part.size()) {
            throw ParseError("missing digits", base_offset + off + i);
        }
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw ParseError(std::string("unexpected character '") + part[i] + "'", base_offset + off + i);
            }
        }
    };
    std::string_view num_part = text.substr(0, slash);
    check_int(num_part, 0, true);
    std::string num_str(num_part[0] == '+' ? num_part.substr(1) : num_part);
    Integer num(num_str, 10);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        std::string_view den_part = text.substr(slash + 1);
        check_int(den_part, slash + 1, false);
        den = Integer(std::string(den_part), 10);
        if (den == 0) {
            throw ParseError("zero denominator", base_offset + slash + 1);
        }
    }
    return make_rational(num, den);
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    return r.get_str(10);
}

/// Fixed-point decimal rendering with `digits` fractional digits (truncated
/// toward zero). Presentation only.
inline std::string to_decimal(const Rational& r, unsigned digits) {
    Integer scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer scaled = r.get_num() * scale;
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), r.get_den().get_mpz_t());
    const bool negative = sgn(r) < 0;
    Integer mag = abs(q);
    std::string body = mag.get_str(10);
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    std::string out = negative ? "-" : "";
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

/// r^e for a nonnegative exponent.
inline Rational pow(const Rational& r, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
    return out;
}

}  // namespace univadj
