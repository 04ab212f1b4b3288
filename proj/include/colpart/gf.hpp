#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "linear_solve.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "transfer.hpp"

namespace colpart {

// C_G^(k)(x, y) = numerator / denominator. The denominator is normalized to
// constant term +1 when it comes out of rational_gf; hand-built values may
// carry any scaling, and equality is always by cross-multiplication.
struct RationalGF {
    XYPolynomial numerator;
    XYPolynomial denominator;
};

inline bool gf_equiv(const RationalGF& a, const RationalGF& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
}

// Power-series coefficients x^0..x^n_max of numerator / denominator in
// Z[y][[x]]. The x^0 coefficient of the denominator must divide exactly at
// every step (it is 1 for normalized forms).
inline std::vector<YPolynomial> expand(const RationalGF& g, std::size_t n_max) {
    const YPolynomial d0 = g.denominator.coeff(0);
    if (d0.is_zero()) {
        throw degenerate_gf_error("denominator vanishes at x = 0");
    }
    std::vector<YPolynomial> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        YPolynomial acc = g.numerator.coeff(n);
        for (std::size_t j = 1; j <= n && j < g.denominator.size(); ++j) {
            acc -= g.denominator[j] * out[n - j];
        }
        out.push_back(divexact(acc, d0));
    }
    return out;
}

namespace detail {

inline YPolynomial lcm(const YPolynomial& a, const YPolynomial& b) { return divexact(a * b, gcd(a, b)); }

// Coefficients x^1..x^n_max of num / den over Q, required to be integers.
inline std::vector<BigInt> integer_series_quotient(const Polynomial<BigInt>& num, const Polynomial<BigInt>& den,
                                                   std::size_t n_max) {
    if (sgn(den.coeff(0)) == 0) {
        throw degenerate_gf_error("denominator vanishes at x = 0 after y := 1");
    }
    const mpq_class d0(den.coeff(0));
    std::vector<mpq_class> c;
    c.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        mpq_class acc(num.coeff(n));
        for (std::size_t j = 1; j <= n && j < den.size(); ++j) {
            acc -= mpq_class(den[j]) * c[n - j];
        }
        acc /= d0;
        c.push_back(acc);
    }
    std::vector<BigInt> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (c[n].get_den() != 1) {
            throw degenerate_gf_error("coefficient of x^" + std::to_string(n) + " is not an integer");
        }
        out.push_back(c[n].get_num());
    }
    return out;
}

} // namespace detail

// Coefficients of x^1..x^n_max of g with y := 1.
inline std::vector<BigInt> eval_gf_at_y1(const RationalGF& g, std::size_t n_max) {
    return detail::integer_series_quotient(eval_y_at_one(g.numerator), eval_y_at_one(g.denominator), n_max);
}

// Coefficients of x^1..x^n_max of dg/dy at y = 1, via the quotient rule:
// (N_y D - N D_y) / D^2.
inline std::vector<BigInt> eval_gf_dy_at_y1(const RationalGF& g, std::size_t n_max) {
    const auto n1 = eval_y_at_one(g.numerator);
    const auto d1 = eval_y_at_one(g.denominator);
    const auto ny = dy_at_one(g.numerator);
    const auto dy = dy_at_one(g.denominator);
    return detail::integer_series_quotient(ny * d1 - n1 * dy, d1 * d1, n_max);
}

// Smallest order d <= max_order such that
//     sum_{j=0..d} a_j(y) p_{n-j} = 0   for all n > d,  a_0 = 1,
// holds on every available term. The first d equations (n = d+1..2d) are
// solved over Q(y); the remaining terms are held out and must vanish too.
// Returns the denominator sum_j a_j x^j cleared to Z[y] coefficients with
// constant term +1, or nullopt.
inline std::optional<XYPolynomial> guess_recurrence(const SeriesInX& s, std::size_t max_order) {
    const std::size_t last = s.n_max();
    if (last + 1 < 2 * max_order + 2) {
        throw contract_violation("guess_recurrence needs " + std::to_string(2 * max_order + 2) + " terms, got " +
                                 std::to_string(last + 1));
    }
    const auto& p = s.terms();
    for (std::size_t d = 1; d <= max_order; ++d) {
        YMatrix a(d, std::vector<YPolynomial>(d));
        std::vector<YPolynomial> rhs(d);
        for (std::size_t row = 0; row < d; ++row) {
            const std::size_t n = d + 1 + row;
            for (std::size_t j = 1; j <= d; ++j) {
                a[row][j - 1] = p[n - j];
            }
            rhs[row] = -p[n];
        }
        const auto sol = solve_linear_system_over_yfield(a, rhs);
        if (!sol) {
            continue;
        }

        YPolynomial common(BigInt(1));
        for (const auto& r : *sol) {
            common = detail::lcm(common, r.denominator);
        }
        std::vector<YPolynomial> coeffs{common};
        for (const auto& r : *sol) {
            coeffs.push_back(r.numerator * divexact(common, r.denominator));
        }
        YPolynomial g;
        for (const auto& c : coeffs) {
            g = gcd(g, c);
        }
        for (auto& c : coeffs) {
            c = divexact(c, g);
        }
        // A primitive denominator of a transfer-matrix series has a unit
        // constant term; anything else means the guess is not usable.
        if (coeffs[0].degree() != 0 || abs(coeffs[0][0]) != 1) {
            continue;
        }
        if (sgn(coeffs[0][0]) < 0) {
            for (auto& c : coeffs) {
                c = -c;
            }
        }

        bool holds = true;
        for (std::size_t n = 2 * d + 1; n <= last && holds; ++n) {
            YPolynomial acc;
            for (std::size_t j = 0; j <= d; ++j) {
                acc += coeffs[j] * p[n - j];
            }
            holds = acc.is_zero();
        }
        if (holds) {
            return XYPolynomial(std::move(coeffs));
        }
    }
    return std::nullopt;
}

struct GfOptions {
    TransferOptions transfer;
    // 0: use the transfer-matrix dimension.
    std::size_t max_order = 0;
};

// Rational form of C_G^(k)(x, y) recovered from exact series data. The
// denominator is guessed from the series; the numerator is the truncated
// product series * denominator, and every further coefficient of that
// product (at least 2 * order of them beyond the fitted window) must be 0.
inline RationalGF rational_gf(const BaseGraph& g, int k, const GfOptions& opts = {}) {
    std::size_t max_order = opts.max_order;
    if (max_order == 0) {
        max_order = transfer_matrix(g, k, opts.transfer).dimension();
    }
    SeriesInX s = series(g, k, 2 * max_order + 1, opts.transfer);
    const auto denominator = guess_recurrence(s, max_order);
    if (!denominator) {
        throw not_found_error("no recurrence of order <= " + std::to_string(max_order) + " fits " +
                              std::to_string(s.n_max()) + " terms");
    }
    const auto order = static_cast<std::size_t>(denominator->degree());
    if (s.n_max() < 4 * order) {
        s = series(g, k, 4 * order, opts.transfer);
    }

    XYPolynomial full(std::vector<YPolynomial>(s.terms().begin(), s.terms().end()));
    const XYPolynomial product = full * *denominator;
    for (std::size_t n = order + 1; n <= s.n_max(); ++n) {
        if (!product.coeff(n).is_zero()) {
            throw verification_error("re-expansion mismatch at x^" + std::to_string(n));
        }
    }
    // full = 1 + C, so C's numerator is the truncated product minus the
    // denominator itself.
    RationalGF out{product.truncated(order + 1) - *denominator, *denominator};
    const BigInt c = gcd(content(out.numerator), content(out.denominator));
    if (c > 1) {
        out.numerator = divexact(out.numerator, c);
        out.denominator = divexact(out.denominator, c);
    }
    return out;
}

inline BigRational expected_size_from_term(const YPolynomial& term, const BaseGraph& g, int k, int n) {
    return BigRational(derivative_at_one(term), coloring_count(g, k, n));
}

// Mean number of parts when every vertex of G x P_n gets a uniform color.
inline BigRational expected_size(const BaseGraph& g, int k, int n, const TransferOptions& opts = {}) {
    if (n < 1) {
        throw contract_violation("expected_size needs n >= 1");
    }
    const SeriesInX s = series(g, k, static_cast<std::size_t>(n), opts);
    return expected_size_from_term(s.term(static_cast<std::size_t>(n)), g, k, n);
}

} // namespace colpart
