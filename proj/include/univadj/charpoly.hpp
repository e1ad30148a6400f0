// Exact characteristic polynomials by the Faddeev-LeVerrier recurrence.
//
// This is the brute-force reference path: O(n^4) big-integer operations,
// no structure assumed. Every closed-form result in union_formula.hpp is
// checked against it.
#pragma once

#include "univadj/polynomial.hpp"
#include "univadj/rational.hpp"
#include "univadj/roots.hpp"
#include "univadj/universal.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace univadj {

/// Default cap on the matrix order accepted by charpoly_exact.
inline constexpr std::size_t kOracleOrderLimit = 300;

/// det(xI - m), monic of degree n.
///
/// The matrix is first cleared of denominators (B = L*m, L the lcm of entry
/// denominators) so the recurrence
///
///     M_1 = I,  c_{n-1} = -tr(B)
///     M_k = B*M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(B*M_k) / k
///
/// runs over the integers with exact divisions. The result is rescaled by
/// det(xI - B/L) = L^{-n} det(LxI - B).
inline Polynomial charpoly_exact(const ExactMatrix& m, std::size_t order_limit = kOracleOrderLimit) {
    const std::size_t n = m.order();
    if (n == 0) {
        throw std::invalid_argument("charpoly_exact: empty matrix");
    }
    if (n > order_limit) {
        throw std::invalid_argument("charpoly_exact: order " + std::to_string(n) + " exceeds oracle limit " +
                                    std::to_string(order_limit));
    }
    Integer lcm = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
    }
    std::vector<Integer> b(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            b[i * n + j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
        }
    }

    // c[k] is the coefficient of x^k of det(xI - B).
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    std::vector<Integer> mk(n * n);  // M_k
    std::vector<Integer> bm(n * n);  // B * M_k
    for (std::size_t i = 0; i < n; ++i) {
        mk[i * n + i] = 1;
    }
    Integer tr;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // M_k = B*M_{k-1} + c_{n-k+1} I, reusing bm = B*M_{k-1}.
            mk.swap(bm);
            for (std::size_t i = 0; i < n; ++i) {
                mk[i * n + i] += c[n - k + 1];
            }
        }
        for (auto& v : bm) {
            v = 0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                const Integer& bil = b[i * n + l];
                if (bil == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    mpz_addmul(bm[i * n + j].get_mpz_t(), bil.get_mpz_t(), mk[l * n + j].get_mpz_t());
                }
            }
        }
        tr = 0;
        for (std::size_t i = 0; i < n; ++i) {
            tr += bm[i * n + i];
        }
        mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = -tr;
    }

    std::vector<Rational> out(n + 1);
    Integer scale = 1;  // L^(n-k) for k = n downwards
    for (std::size_t k = n + 1; k-- > 0;) {
        out[k] = make_rational(c[k], scale);
        scale *= lcm;
    }
    return Polynomial(std::move(out));
}

/// Eigenvalues of a symmetric matrix, each isolated to width <= tol, with
/// multiplicities summing to the order.
inline std::vector<RootInterval> spectrum_exact(const ExactMatrix& m, const Rational& tol,
                                                std::size_t order_limit = kOracleOrderLimit) {
    if (!m.is_symmetric()) {
        throw std::invalid_argument("spectrum_exact: matrix is not symmetric");
    }
    return isolate_real_roots(charpoly_exact(m, order_limit), tol);
}

}  // namespace univadj
