// Exact real-root isolation: square-free decomposition, Sturm sequences,
// bisection, and exact recovery of rational roots.
#pragma once

#include "univadj/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace univadj {

/// A real root located to an interval. When `lower == upper` the root is
/// exactly that rational; otherwise it lies strictly between them.
struct RootInterval {
    Rational lower;
    Rational upper;
    unsigned multiplicity = 1;

    bool is_exact() const { return lower == upper; }
    Rational width() const { return upper - lower; }
};

struct SquareFreeFactor {
    Polynomial factor;  ///< monic, square-free
    unsigned multiplicity;
};

/// Yun's algorithm: p = lead * prod factor_i^multiplicity_i with the
/// factors pairwise coprime. Constant factors are dropped.
inline std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p) {
    std::vector<SquareFreeFactor> out;
    if (p.degree() < 1) {
        return out;
    }
    const Polynomial f = p.monic();
    const Polynomial df = f.derivative();
    Polynomial a = gcd(f, df);
    Polynomial b = divmod(f, a).first;
    Polynomial c = divmod(df, a).first;
    Polynomial d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        a = gcd(b, d);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
        if (a.degree() > 0) {
            out.push_back({a, i});
        }
        ++i;
    }
    return out;
}

/// Signed remainder sequence p, p', -rem(...), ... with each member
/// rescaled by a positive constant.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p) {
        if (p.is_zero()) {
            return;
        }
        chain_.push_back(normalize(p));
        Polynomial next = normalize(p.derivative());
        while (!next.is_zero()) {
            chain_.push_back(next);
            const auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
            next = normalize(-r);
        }
    }

    /// Number of sign changes along the chain at `at` (zeros skipped).
    std::size_t variations(const Rational& at) const {
        std::size_t changes = 0;
        int prev = 0;
        for (const auto& q : chain_) {
            const int s = q.sign_at(at);
            if (s == 0) {
                continue;
            }
            if (prev != 0 && s != prev) {
                ++changes;
            }
            prev = s;
        }
        return changes;
    }

    /// Distinct roots in (lower, upper] of the generating polynomial.
    std::size_t count(const Rational& lower, const Rational& upper) const {
        const auto vl = variations(lower);
        const auto vu = variations(upper);
        return vl > vu ? vl - vu : 0;
    }

private:
    static Polynomial normalize(const Polynomial& p) {
        if (p.is_zero()) {
            return p;
        }
        return p.scaled(Rational(1) / abs(p.leading()));
    }

    std::vector<Polynomial> chain_;
};

/// Power of two strictly exceeding every |root| of p (Cauchy bound).
inline Rational root_bound(const Polynomial& p) {
    Rational m = 0;
    const Rational& lead = p.leading();
    for (long k = 0; k < p.degree(); ++k) {
        const Rational r = abs(p.coefficient(static_cast<std::size_t>(k)) / lead);
        if (r > m) {
            m = r;
        }
    }
    Rational bound = 1;
    while (bound <= m + 1) {
        bound *= 2;
    }
    return bound;
}

/// Distinct real roots of p in (lower, upper].
inline std::size_t count_distinct_real_roots(const Polynomial& p, const Rational& lower, const Rational& upper) {
    if (p.degree() < 1) {
        return 0;
    }
    const auto parts = square_free_decomposition(p);
    Polynomial sqf = Polynomial::constant(Rational(1));
    for (const auto& f : parts) {
        sqf *= f.factor;
    }
    return SturmSequence(sqf).count(lower, upper);
}

/// Real roots of p in (lower, upper] counted with multiplicity.
inline std::size_t count_real_roots(const Polynomial& p, const Rational& lower, const Rational& upper) {
    std::size_t total = 0;
    for (const auto& f : square_free_decomposition(p)) {
        total += f.multiplicity * SturmSequence(f.factor).count(lower, upper);
    }
    return total;
}

/// The rational of smallest denominator in the closed interval [lo, hi].
inline Rational simplest_rational_between(Rational lo, Rational hi) {
    if (lo > hi) {
        std::swap(lo, hi);
    }
    if (lo <= 0 && hi >= 0) {
        return Rational(0);
    }
    if (hi < 0) {
        return -simplest_rational_between(-hi, -lo);
    }
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(fl) == lo) {
        return lo;
    }
    if (Rational(fl + 1) <= hi) {
        return Rational(fl + 1);
    }
    const Rational flr(fl);
    const Rational inner = simplest_rational_between(Rational(1) / (hi - flr), Rational(1) / (lo - flr));
    return flr + Rational(1) / inner;
}

namespace detail {

/// |leading coefficient| of the primitive integer multiple of p; every
/// rational root of p has a denominator dividing it.
inline Integer denominator_bound(const Polynomial& p) {
    Integer l = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Integer content = 0;
    for (const auto& c : p.coefficients()) {
        const Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    const Integer lead = p.leading().get_num() * (l / p.leading().get_den());
    return abs(lead / content);
}

}  // namespace detail

/// Isolates every distinct real root of p. Rational roots come back as exact
/// points; irrational ones as open intervals of width <= tol. Intervals are
/// pairwise disjoint and sorted ascending.
inline std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& tol) {
    if (p.is_zero()) {
        throw InvalidCoefficient("isolate_real_roots: zero polynomial");
    }
    if (tol <= 0) {
        throw InvalidCoefficient("isolate_real_roots: tolerance must be positive");
    }
    std::vector<RootInterval> out;
    const auto parts = square_free_decomposition(p);
    if (parts.empty()) {
        return out;
    }
    Polynomial sqf = Polynomial::constant(Rational(1));
    std::vector<SturmSequence> part_chains;
    part_chains.reserve(parts.size());
    for (const auto& f : parts) {
        sqf *= f.factor;
        part_chains.emplace_back(f.factor);
    }
    const SturmSequence chain(sqf);
    const Rational bound = root_bound(sqf);
    const Integer den_bound = detail::denominator_bound(sqf);
    const Rational exact_width = Rational(1) / Rational(den_bound * den_bound);

    auto multiplicity_in = [&](const Rational& lo, const Rational& hi) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (part_chains[i].count(lo, hi) > 0) {
                return parts[i].multiplicity;
            }
        }
        return 0u;
    };
    auto multiplicity_at = [&](const Rational& r) {
        for (const auto& f : parts) {
            if (f.factor.eval(r) == 0) {
                return f.multiplicity;
            }
        }
        return 0u;
    };

    // Bisect (lo, hi] until each piece holds one distinct root.
    std::vector<std::pair<Rational, Rational>> isolated;
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        const auto n = chain.count(lo, hi);
        if (n == 0) {
            continue;
        }
        if (n == 1) {
            isolated.emplace_back(lo, hi);
            continue;
        }
        const Rational mid = (lo + hi) / 2;
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }

    for (auto [lo, hi] : isolated) {
        const unsigned mult = multiplicity_in(lo, hi);
        if (sqf.eval(hi) == 0) {
            out.push_back({hi, hi, multiplicity_at(hi)});
            continue;
        }
        // Root is now in the open interval (lo, hi). Shrink until it is
        // either hit exactly or the interval is narrow enough to rule out a
        // rational root, then keep going to the requested width.
        bool exact = false;
        bool rational_ruled_out = false;
        while (true) {
            const Rational w = hi - lo;
            if (!rational_ruled_out && w < exact_width) {
                const Rational s = simplest_rational_between(lo, hi);
                if (s != lo && s != hi && sqf.eval(s) == 0) {
                    out.push_back({s, s, mult});
                    exact = true;
                    break;
                }
                rational_ruled_out = true;
            }
            if (rational_ruled_out && w <= tol) {
                break;
            }
            const Rational mid = (lo + hi) / 2;
            if (sqf.eval(mid) == 0) {
                out.push_back({mid, mid, mult});
                exact = true;
                break;
            }
            if (chain.count(lo, mid) == 1) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if (!exact) {
            out.push_back({lo, hi, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lower < b.lower; });
    return out;
}

}  // namespace univadj
