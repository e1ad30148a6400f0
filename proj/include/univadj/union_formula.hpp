// Characteristic polynomials of universal adjacency matrices of disjoint
// unions of connected regular graphs, in terms of the adjacency
// characteristic polynomials of the components.
//
// With vertices grouped by component, U = blockdiag(B_i) + gamma*J where
// B_i = alpha*A_i + (beta + delta*d_i) I. The all-ones vector of each block
// is an eigenvector of B_i with eigenvalue mu_i = (alpha + delta) d_i + beta,
// so by the matrix determinant lemma
//
//     phi(U, x) = P(x) * (1 - gamma * sum_i n_i / (x - mu_i)),
//     P(x) = prod_i P_i(x),  P_i(x) = alpha^{n_i} phi(A_i, (x - beta - delta d_i) / alpha).
//
// Each (x - mu_i) divides P_i exactly, so the right-hand side is evaluated
// as a polynomial: P - gamma * sum_i n_i (P_i / (x - mu_i)) prod_{j != i} P_j.
// See docs/derivation.md.
#pragma once

#include "univadj/charpoly.hpp"
#include "univadj/graph.hpp"
#include "univadj/polynomial.hpp"
#include "univadj/regular.hpp"
#include "univadj/universal.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace univadj {

/// Components of a disjoint union of connected regular graphs plus the
/// universal tuple applied to the whole union.
class UnionInstance {
public:
    UnionInstance(std::vector<RegularComponent> components, UniversalCoefficients coeffs)
        : components_(std::move(components)), coeffs_(std::move(coeffs)) {
        if (components_.empty()) {
            throw std::invalid_argument("UnionInstance: need at least one component");
        }
        for (const auto& c : components_) {
            total_n_ += c.size();
        }
    }

    const std::vector<RegularComponent>& components() const noexcept { return components_; }
    const UniversalCoefficients& coeffs() const noexcept { return coeffs_; }
    std::size_t total_n() const noexcept { return total_n_; }

    /// mu_i = (alpha + delta) d_i + beta: eigenvalue of the i-th diagonal
    /// block on the all-ones vector.
    Rational pole(std::size_t i) const {
        const Rational d(static_cast<unsigned long>(components_.at(i).degree()));
        return (coeffs_.alpha() + coeffs_.delta()) * d + coeffs_.beta();
    }

    /// P_i(x) = det(xI - alpha A_i - (beta + delta d_i) I).
    Polynomial block_charpoly(std::size_t i) const {
        const auto& c = components_.at(i);
        const Rational d(static_cast<unsigned long>(c.degree()));
        return affine_transform(c.charpoly(), coeffs_.alpha(), coeffs_.beta() + coeffs_.delta() * d);
    }

private:
    std::vector<RegularComponent> components_;
    UniversalCoefficients coeffs_;
    std::size_t total_n_ = 0;
};

namespace detail {

inline Polynomial power(const Polynomial& p, std::size_t e) {
    Polynomial acc = Polynomial::constant(Rational(1));
    Polynomial base = p;
    while (e > 0) {
        if (e & 1) {
            acc *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return acc;
}

}  // namespace detail

/// phi(U, x) for the union, monic of degree total_n.
///
/// Identical components are grouped, so a union of m copies of one graph
/// costs one block polynomial raised to the m-th power.
inline Polynomial union_charpoly(const UnionInstance& inst) {
    const auto& comps = inst.components();
    struct Group {
        std::size_t representative;
        std::size_t count;
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const Group& g) { return comps[g.representative] == comps[i]; });
        if (it == groups.end()) {
            groups.push_back({i, 1});
        } else {
            ++it->count;
        }
    }
    const std::size_t k = groups.size();
    std::vector<Polynomial> blocks, powered;
    blocks.reserve(k);
    powered.reserve(k);
    for (const auto& g : groups) {
        blocks.push_back(inst.block_charpoly(g.representative));
        powered.push_back(detail::power(blocks.back(), g.count));
    }
    // prefix[i] = Q_0 ... Q_{i-1}, suffix[i] = Q_i ... Q_{k-1}, Q_g = P_g^{m_g}
    std::vector<Polynomial> prefix(k + 1), suffix(k + 1);
    prefix[0] = Polynomial::constant(Rational(1));
    suffix[k] = Polynomial::constant(Rational(1));
    for (std::size_t i = 0; i < k; ++i) {
        prefix[i + 1] = prefix[i] * powered[i];
    }
    for (std::size_t i = k; i-- > 0;) {
        suffix[i] = powered[i] * suffix[i + 1];
    }
    Polynomial result = prefix[k];
    const Rational& gamma = inst.coeffs().gamma();
    if (gamma == 0) {
        return result;
    }
    Polynomial correction;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& g = groups[i];
        // sum over the m_g copies of n_g * P / (x - mu_g)
        const Polynomial reduced = divide_exact(blocks[i], inst.pole(g.representative)) *
                                   detail::power(blocks[i], g.count - 1);
        const Rational weight(static_cast<unsigned long>(comps[g.representative].size() * g.count));
        correction += (prefix[i] * reduced * suffix[i + 1]).scaled(weight);
    }
    result -= correction.scaled(gamma);
    return result;
}

/// Maps the adjacency spectrum of a connected d-regular graph on n vertices
/// to the spectrum of U: the Perron entry d goes to alpha d + beta + gamma n
/// + delta d, every other xi to alpha xi + beta + delta d. Order is kept.
inline std::vector<Rational> regular_spectrum_map(const std::vector<Rational>& adj_spectrum, const Rational& d,
                                                  std::size_t n, const UniversalCoefficients& c) {
    if (adj_spectrum.size() != n) {
        throw std::invalid_argument("regular_spectrum_map: spectrum has " + std::to_string(adj_spectrum.size()) +
                                    " entries, expected " + std::to_string(n));
    }
    const auto hits = std::count(adj_spectrum.begin(), adj_spectrum.end(), d);
    if (hits == 0) {
        throw std::invalid_argument("regular_spectrum_map: degree " + to_string(d) + " missing from spectrum");
    }
    if (hits > 1) {
        throw std::invalid_argument("regular_spectrum_map: degree " + to_string(d) +
                                    " must be a simple eigenvalue (graph not connected)");
    }
    const Rational shift = c.beta() + c.delta() * d;
    const Rational nn(static_cast<unsigned long>(n));
    std::vector<Rational> out;
    out.reserve(n);
    for (const auto& xi : adj_spectrum) {
        out.push_back(xi == d ? Rational(c.alpha() * d + shift + c.gamma() * nn) : Rational(c.alpha() * xi + shift));
    }
    return out;
}

/// Both sides of phi(U, alpha x + beta + delta d) (x - d)
///             = alpha^{n-1} phi(A, x) (alpha x - alpha d - gamma n).
struct RegularIdentitySides {
    Polynomial lhs;
    Polynomial rhs;
};

inline RegularIdentitySides regular_identity_sides(const Graph& g, const UniversalCoefficients& c) {
    if (g.order() == 0 || !g.is_regular()) {
        throw IrregularComponent(0);
    }
    if (!is_connected(g)) {
        throw std::invalid_argument("regular identity requires a connected graph");
    }
    const std::size_t n = g.order();
    const Rational d(static_cast<unsigned long>(g.degree(0)));
    const Rational nn(static_cast<unsigned long>(n));
    const Polynomial phi_u = charpoly_exact(build_matrix(g, c));
    const Polynomial phi_a = charpoly_exact(adjacency_matrix(g));
    RegularIdentitySides out;
    out.lhs = compose_linear(phi_u, c.alpha(), c.beta() + c.delta() * d) * Polynomial::linear_factor(d);
    const Polynomial tail(std::vector<Rational>{-c.alpha() * d - c.gamma() * nn, c.alpha()});
    out.rhs = (phi_a * tail).scaled(pow(c.alpha(), n - 1));
    return out;
}

/// True iff the cleared-denominator regular-graph identity holds exactly,
/// with both characteristic polynomials taken from the oracle.
inline bool regular_identity_check(const Graph& g, const UniversalCoefficients& c) {
    const auto sides = regular_identity_sides(g, c);
    return sides.lhs == sides.rhs;
}

/// Closed-form phi(U, x) for any graph whose components are all regular.
/// Throws IrregularComponent otherwise.
inline Polynomial formula_charpoly(const Graph& g, const UniversalCoefficients& c) {
    auto summary = regular_summary(g);
    if (!summary.regular()) {
        throw IrregularComponent(*summary.first_irregular);
    }
    return union_charpoly(UnionInstance(std::move(summary.components), c));
}

namespace detail {

inline std::vector<RegularComponent> summarize_pieces(const std::vector<Graph>& gs) {
    if (gs.empty()) {
        throw std::invalid_argument("need at least one graph");
    }
    std::vector<RegularComponent> out;
    out.reserve(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (gs[i].order() == 0 || !gs[i].is_regular()) {
            throw IrregularComponent(i);
        }
        out.push_back(RegularComponent::from_graph(gs[i]));
    }
    return out;
}

}  // namespace detail

/// Seidel characteristic polynomial of the disjoint union of `gs`.
inline Polynomial seidel_union_charpoly(const std::vector<Graph>& gs) {
    return union_charpoly(UnionInstance(detail::summarize_pieces(gs), preset(Preset::seidel)));
}

/// Signless Laplacian characteristic polynomial of the complement of the
/// disjoint union of `gs`, i.e. of the join of their complements.
inline Polynomial signless_laplacian_of_join_charpoly(const std::vector<Graph>& gs) {
    auto pieces = detail::summarize_pieces(gs);
    std::size_t n = 0;
    for (const auto& p : pieces) {
        n += p.size();
    }
    return union_charpoly(UnionInstance(std::move(pieces), complement_transform(preset(Preset::signless_laplacian), n)));
}

enum class VerifyStatus { equal, unequal, inapplicable };

inline const char* to_string(VerifyStatus s) {
    switch (s) {
    case VerifyStatus::equal:
        return "equal";
    case VerifyStatus::unequal:
        return "unequal";
    case VerifyStatus::inapplicable:
        return "inapplicable";
    }
    return "?";
}

struct VerificationReport {
    VerifyStatus status = VerifyStatus::inapplicable;
    std::size_t degree = 0;
    std::optional<std::size_t> first_mismatch_index;  ///< coefficient index (power of x)
    std::optional<Polynomial> formula_poly;
    Polynomial oracle_poly;
    std::optional<std::size_t> irregular_component;
};

/// Compares the closed form with the oracle on (g, c). Irregular inputs get
/// an inapplicable verdict carrying only the oracle polynomial.
inline VerificationReport verify_against_oracle(const Graph& g, const UniversalCoefficients& c) {
    VerificationReport r;
    r.degree = g.order();
    r.oracle_poly = charpoly_exact(build_matrix(g, c));
    auto summary = regular_summary(g);
    if (!summary.regular()) {
        r.status = VerifyStatus::inapplicable;
        r.irregular_component = summary.first_irregular;
        return r;
    }
    r.formula_poly = union_charpoly(UnionInstance(std::move(summary.components), c));
    const auto& f = r.formula_poly->coefficients();
    const auto& o = r.oracle_poly.coefficients();
    for (std::size_t k = 0; k < std::max(f.size(), o.size()); ++k) {
        if (r.formula_poly->coefficient(k) != r.oracle_poly.coefficient(k)) {
            r.first_mismatch_index = k;
            break;
        }
    }
    r.status = r.first_mismatch_index ? VerifyStatus::unequal : VerifyStatus::equal;
    return r;
}

}  // namespace univadj
