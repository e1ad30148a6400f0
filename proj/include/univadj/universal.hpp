// Universal adjacency matrices U = alpha*A + beta*I + gamma*J + delta*D.
#pragma once

#include "univadj/graph.hpp"
#include "univadj/polynomial.hpp"
#include "univadj/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace univadj {

/// The tuple (alpha, beta, gamma, delta). alpha is never zero.
class UniversalCoefficients {
public:
    UniversalCoefficients(Rational alpha, Rational beta, Rational gamma, Rational delta)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)), delta_(std::move(delta)) {
        if (alpha_ == 0) {
            throw InvalidCoefficient("universal adjacency matrix requires alpha != 0");
        }
    }

    UniversalCoefficients(long alpha, long beta, long gamma, long delta)
        : UniversalCoefficients(Rational(alpha), Rational(beta), Rational(gamma), Rational(delta)) {}

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& beta() const noexcept { return beta_; }
    const Rational& gamma() const noexcept { return gamma_; }
    const Rational& delta() const noexcept { return delta_; }

    /// Multiplies every coefficient by t != 0.
    UniversalCoefficients scaled(const Rational& t) const {
        return UniversalCoefficients(alpha_ * t, beta_ * t, gamma_ * t, delta_ * t);
    }

    friend bool operator==(const UniversalCoefficients& a, const UniversalCoefficients& b) {
        return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.gamma_ == b.gamma_ && a.delta_ == b.delta_;
    }

private:
    Rational alpha_;
    Rational beta_;
    Rational gamma_;
    Rational delta_;
};

/// "a,b,c,d"
inline std::string to_string(const UniversalCoefficients& c) {
    return to_string(c.alpha()) + "," + to_string(c.beta()) + "," + to_string(c.gamma()) + "," + to_string(c.delta());
}

inline std::ostream& operator<<(std::ostream& os, const UniversalCoefficients& c) { return os << to_string(c); }

/// Parses "a,b,c,d"; each entry an integer or p/q. Spaces around entries
/// are allowed.
inline UniversalCoefficients parse_coefficients(std::string_view text) {
    std::array<Rational, 4> vals;
    std::size_t start = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t end = text.find(',', start);
        if (k < 3 && end == std::string_view::npos) {
            throw ParseError("expected four comma-separated coefficients", text.size());
        }
        if (k == 3) {
            if (end != std::string_view::npos) {
                throw ParseError("more than four coefficients", end);
            }
            end = text.size();
        }
        std::size_t a = start;
        std::size_t b = end;
        while (a < b && text[a] == ' ') {
            ++a;
        }
        while (b > a && text[b - 1] == ' ') {
            --b;
        }
        vals[k] = parse_rational(text.substr(a, b - a), a);
        start = end + 1;
    }
    if (vals[0] == 0) {
        throw ParseError("alpha must be nonzero", 0);
    }
    return UniversalCoefficients(vals[0], vals[1], vals[2], vals[3]);
}

enum class Preset { adjacency, laplacian, signless_laplacian, seidel };

/// The four named tuples. `n` is accepted for a uniform interface and does
/// not affect the result.
inline UniversalCoefficients preset(Preset which, std::size_t /*n*/ = 1) {
    switch (which) {
    case Preset::adjacency:
        return {1, 0, 0, 0};
    case Preset::laplacian:
        return {-1, 0, 0, 1};
    case Preset::signless_laplacian:
        return {1, 0, 0, 1};
    case Preset::seidel:
        return {-2, -1, 1, 0};
    }
    throw std::invalid_argument("unknown preset");
}

inline std::optional<Preset> preset_from_name(std::string_view name) {
    if (name == "adjacency") {
        return Preset::adjacency;
    }
    if (name == "laplacian") {
        return Preset::laplacian;
    }
    if (name == "signless_laplacian" || name == "signless-laplacian") {
        return Preset::signless_laplacian;
    }
    if (name == "seidel") {
        return Preset::seidel;
    }
    return std::nullopt;
}

inline UniversalCoefficients preset(std::string_view name, std::size_t n = 1) {
    if (auto p = preset_from_name(name)) {
        return preset(*p, n);
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

inline constexpr std::array<Preset, 4> kAllPresets{Preset::adjacency, Preset::laplacian, Preset::signless_laplacian,
                                                   Preset::seidel};

/// The tuple that, applied to G, gives the matrix `c` gives on the complement
/// of G (order n). Uses A(~G) = J - I - A and D(~G) = (n-1)I - D.
inline UniversalCoefficients complement_transform(const UniversalCoefficients& c, std::size_t n) {
    const Rational n_minus_1 = Rational(static_cast<long>(n)) - 1;
    return UniversalCoefficients(-c.alpha(), c.beta() - c.alpha() + c.delta() * n_minus_1, c.gamma() + c.alpha(),
                                 -c.delta());
}

/// Dense square matrix of rationals, row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;

    explicit ExactMatrix(std::size_t n) : n_(n), data_(n * n, Rational(0)) {}

    ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) : ExactMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != n_) {
                throw std::invalid_argument("ExactMatrix: rows must all have length n");
            }
            std::size_t j = 0;
            for (long v : row) {
                (*this)(i, j++) = v;
            }
            ++i;
        }
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    std::size_t order() const noexcept { return n_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    Rational trace() const {
        Rational t = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.n_ != b.n_) {
            throw std::invalid_argument("ExactMatrix: order mismatch");
        }
        ExactMatrix out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) {
            for (std::size_t k = 0; k < a.n_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < a.n_; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

private:
    std::size_t n_ = 0;
    std::vector<Rational> data_;
};

/// "[[a,b],[c,d]]"
inline std::string to_string(const ExactMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.order(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (j) {
                out += ',';
            }
            out += to_string(m(i, j));
        }
        out += ']';
    }
    return out + "]";
}

/// Diagonal entries beta + gamma + delta*deg(u); off-diagonal gamma, plus
/// alpha for adjacent pairs.
inline ExactMatrix build_matrix(const Graph& g, const UniversalCoefficients& c) {
    const std::size_t n = g.order();
    if (n == 0) {
        throw std::invalid_argument("build_matrix: graph must have at least one vertex");
    }
    ExactMatrix m(n);
    const Rational off_adjacent = c.gamma() + c.alpha();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) {
                m(u, u) = c.beta() + c.gamma() + c.delta() * static_cast<unsigned long>(g.degree(u));
            } else {
                m(u, v) = c.gamma();
            }
        }
        for (Vertex v : g.neighbors(u)) {
            m(u, v) = off_adjacent;
        }
    }
    return m;
}

inline ExactMatrix adjacency_matrix(const Graph& g) { return build_matrix(g, preset(Preset::adjacency)); }

}  // namespace univadj
