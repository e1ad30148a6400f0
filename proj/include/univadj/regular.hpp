// Decomposition of a graph into connected regular components, each
// summarised by (order, degree, adjacency characteristic polynomial).
#pragma once

#include "univadj/charpoly.hpp"
#include "univadj/graph.hpp"
#include "univadj/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace univadj {

/// Raised when a closed form needs regular components and gets an
/// irregular one.
class IrregularComponent : public std::invalid_argument {
public:
    explicit IrregularComponent(std::size_t index)
        : std::invalid_argument("component " + std::to_string(index) + " is irregular"), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Adjacency characteristic polynomial of K_n: (x - (n-1)) (x + 1)^(n-1).
inline Polynomial complete_graph_charpoly(std::size_t n) {
    Polynomial p = Polynomial::linear_factor(Rational(static_cast<long>(n) - 1));
    const Polynomial plus_one = Polynomial::linear_factor(Rational(-1));
    for (std::size_t i = 1; i < n; ++i) {
        p *= plus_one;
    }
    return p;
}

/// Adjacency characteristic polynomial of C_n (n >= 3): L_n(x) - 2 where
/// L_0 = 2, L_1 = x, L_{k+1} = x L_k - L_{k-1}.
inline Polynomial cycle_charpoly(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("cycle_charpoly: n must be at least 3");
    }
    Polynomial prev({2});
    Polynomial cur = Polynomial::x();
    for (std::size_t k = 1; k < n; ++k) {
        Polynomial next = Polynomial::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur - Polynomial({2});
}

/// One connected regular component: order n_i, degree d_i and phi(A_i, x).
class RegularComponent {
public:
    /// Checks that `charpoly` is monic of degree `size` with integer
    /// coefficients and has `degree` as a simple root.
    RegularComponent(std::size_t size, std::size_t degree, Polynomial charpoly)
        : size_(size), degree_(degree), charpoly_(std::move(charpoly)) {
        if (size == 0 || degree >= size) {
            throw std::invalid_argument("RegularComponent: need 0 <= degree < size");
        }
        if (!charpoly_.is_monic() || charpoly_.degree() != static_cast<long>(size) ||
            !charpoly_.has_integer_coefficients()) {
            throw std::invalid_argument("RegularComponent: charpoly must be monic of degree size with integer coefficients");
        }
        const Rational d(static_cast<unsigned long>(degree));
        const Polynomial rest = divide_exact(charpoly_, d);
        if (rest.eval(d) == 0) {
            throw std::invalid_argument("RegularComponent: degree is a repeated eigenvalue (component not connected)");
        }
    }

    /// Summarises a connected regular graph. Complete graphs, cycles and the
    /// single vertex use closed forms; everything else the exact oracle.
    static RegularComponent from_graph(const Graph& g) {
        if (g.order() == 0 || !g.is_regular()) {
            throw IrregularComponent(0);
        }
        if (!is_connected(g)) {
            throw std::invalid_argument("RegularComponent: graph is not connected");
        }
        const std::size_t n = g.order();
        const std::size_t d = g.degree(0);
        if (d + 1 == n) {
            return RegularComponent(n, d, complete_graph_charpoly(n));
        }
        if (d == 2) {
            return RegularComponent(n, d, cycle_charpoly(n));
        }
        return RegularComponent(n, d, charpoly_exact(adjacency_matrix(g)));
    }

    std::size_t size() const noexcept { return size_; }
    std::size_t degree() const noexcept { return degree_; }
    const Polynomial& charpoly() const noexcept { return charpoly_; }

    friend bool operator==(const RegularComponent& a, const RegularComponent& b) {
        return a.size_ == b.size_ && a.degree_ == b.degree_ && a.charpoly_ == b.charpoly_;
    }

private:
    std::size_t size_;
    std::size_t degree_;
    Polynomial charpoly_;
};

struct RegularSummary {
    std::vector<RegularComponent> components;    ///< filled only when all are regular
    std::optional<std::size_t> first_irregular;  ///< index into components(g)

    bool regular() const noexcept { return !first_irregular.has_value(); }
};

/// Splits g into connected components and summarises each, or reports the
/// first irregular one.
inline RegularSummary regular_summary(const Graph& g) {
    if (g.order() == 0) {
        throw std::invalid_argument("regular_summary: graph must have at least one vertex");
    }
    RegularSummary out;
    const auto comps = components(g);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!comps[i].graph.is_regular()) {
            out.components.clear();
            out.first_irregular = i;
            return out;
        }
    }
    out.components.reserve(comps.size());
    for (const auto& c : comps) {
        out.components.push_back(RegularComponent::from_graph(c.graph));
    }
    return out;
}

}  // namespace univadj
