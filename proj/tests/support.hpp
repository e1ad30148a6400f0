// Test-only helpers: random generators and oracles that share no code path
// with the library routines they check.
#pragma once

#include "univadj.hpp"

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

namespace univadj::testing {

inline Polynomial roots_poly(std::initializer_list<long> roots) {
    std::vector<Rational> r;
    for (long v : roots) {
        r.emplace_back(v);
    }
    return from_roots(r);
}

inline Rational random_rational(std::mt19937_64& rng, long max_num = 5, long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long max_num = 5, long max_den = 4) {
    Rational r;
    do {
        r = random_rational(rng, max_num, max_den);
    } while (r == 0);
    return r;
}

inline UniversalCoefficients random_coeffs(std::mt19937_64& rng) {
    return UniversalCoefficients(random_nonzero_rational(rng), random_rational(rng), random_rational(rng),
                                 random_rational(rng));
}

/// The 20 fixed-seed random tuples shared by the acceptance criteria.
inline std::vector<UniversalCoefficients> fixed_random_tuples(std::size_t count = 20, unsigned long seed = 20261015) {
    std::mt19937_64 rng(seed);
    std::vector<UniversalCoefficients> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_coeffs(rng));
    }
    return out;
}

/// Presets, their complement transforms at order n, and the random tuples.
inline std::vector<UniversalCoefficients> tuple_set(std::size_t n) {
    std::vector<UniversalCoefficients> out;
    for (auto p : kAllPresets) {
        out.push_back(preset(p));
    }
    for (auto p : kAllPresets) {
        out.push_back(complement_transform(preset(p), n));
    }
    for (auto& c : fixed_random_tuples()) {
        out.push_back(c);
    }
    return out;
}

inline Polynomial random_monic(std::mt19937_64& rng, std::size_t degree) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k < degree; ++k) {
        c.push_back(random_rational(rng));
    }
    c.emplace_back(1);
    return Polynomial(std::move(c));
}

inline Polynomial random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& v : c) {
        v = random_rational(rng);
    }
    return Polynomial(std::move(c));
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (edge(rng)) {
                e.emplace_back(u, v);
            }
        }
    }
    return Graph(n, e);
}

inline ExactMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long bound = 5) {
    std::uniform_int_distribution<long> val(-bound, bound);
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            m(i, j) = val(rng);
            m(j, i) = m(i, j);
        }
    }
    return m;
}

/// All graphs on n labelled vertices (n <= 6 keeps this small).
inline std::vector<Graph> all_graphs(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            slots.emplace_back(u, v);
        }
    }
    std::vector<Graph> out;
    for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (std::size_t b = 0; b < slots.size(); ++b) {
            if (mask & (1ul << b)) {
                e.push_back(slots[b]);
            }
        }
        out.emplace_back(n, e);
    }
    return out;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Rational bareiss_determinant(const ExactMatrix& m) {
    const std::size_t n = m.order();
    Integer lcm = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
    }
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
        }
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    Integer det = n ? a[n - 1][n - 1] : Integer(1);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        scale *= lcm;
    }
    return make_rational(det * sign, scale);
}

/// det(xI - m) by evaluating at n+1 integer points with Bareiss and
/// Lagrange interpolation.
inline Polynomial interpolated_charpoly(const ExactMatrix& m) {
    const std::size_t n = m.order();
    std::vector<Rational> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational x(static_cast<long>(k));
        ExactMatrix shifted(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                shifted(i, j) = (i == j ? x : Rational(0)) - m(i, j);
            }
        }
        xs.push_back(x);
        ys.push_back(bareiss_determinant(shifted));
    }
    Polynomial out;
    for (std::size_t i = 0; i <= n; ++i) {
        Polynomial basis = Polynomial::constant(Rational(1));
        Rational denom = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j != i) {
                basis *= Polynomial::linear_factor(xs[j]);
                denom *= xs[i] - xs[j];
            }
        }
        out += basis.scaled(ys[i] / denom);
    }
    return out;
}

inline ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(a.order() + b.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
        for (std::size_t j = 0; j < a.order(); ++j) {
            m(i, j) = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.order(); ++i) {
        for (std::size_t j = 0; j < b.order(); ++j) {
            m(a.order() + i, a.order() + j) = b(i, j);
        }
    }
    return m;
}

struct CatalogEntry {
    const char* name;
    Graph graph;
};

/// Connected regular catalog graphs (C3 is K3 and listed once).
inline std::vector<CatalogEntry> regular_catalog(std::size_t max_order) {
    std::vector<CatalogEntry> all{
        {"K1", catalog::complete(1)}, {"K2", catalog::complete(2)}, {"K3", catalog::complete(3)},
        {"K4", catalog::complete(4)}, {"K5", catalog::complete(5)}, {"C4", catalog::cycle(4)},
        {"C5", catalog::cycle(5)},    {"C6", catalog::cycle(6)},    {"C7", catalog::cycle(7)},
        {"C8", catalog::cycle(8)},    {"C9", catalog::cycle(9)},    {"Q3", catalog::hypercube(3)},
        {"K3,3", catalog::complete_bipartite(3, 3)},                {"Petersen", catalog::petersen()},
    };
    std::vector<CatalogEntry> out;
    for (auto& e : all) {
        if (e.graph.order() <= max_order) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

/// Every multiset of catalog entries with total order <= max_total, as index
/// lists in nondecreasing order.
inline std::vector<std::vector<std::size_t>> catalog_multisets(const std::vector<CatalogEntry>& cat,
                                                               std::size_t max_total) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto rec = [&](auto&& self, std::size_t start, std::size_t used) -> void {
        if (!current.empty()) {
            out.push_back(current);
        }
        for (std::size_t i = start; i < cat.size(); ++i) {
            if (used + cat[i].graph.order() <= max_total) {
                current.push_back(i);
                self(self, i, used + cat[i].graph.order());
                current.pop_back();
            }
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace univadj::testing
