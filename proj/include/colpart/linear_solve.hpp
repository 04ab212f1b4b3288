#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace colpart {

// Element of Q(y) kept as numerator/denominator in Z[y]. The pair is reduced
// by its polynomial gcd and the denominator has positive leading coefficient.
struct RationalFunction {
    YPolynomial numerator;
    YPolynomial denominator{BigInt(1)};

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

inline RationalFunction make_rational_function(YPolynomial num, YPolynomial den) {
    if (den.is_zero()) {
        throw contract_violation("rational function with zero denominator");
    }
    if (num.is_zero()) {
        return {YPolynomial{}, YPolynomial(BigInt(1))};
    }
    YPolynomial g = gcd(num, den);
    if (sgn(den.coefficients().back()) < 0) {
        g = -g;
    }
    return {divexact(num, g), divexact(den, g)};
}

using YMatrix = std::vector<std::vector<YPolynomial>>;

// Solve A x = b over the field Q(y) by fraction-free Gauss-Jordan
// elimination. Every division in the update step is exact in Z[y]; after
// the last step all diagonal entries equal +/-det(A) and the right-hand
// side holds det(A) * x. Returns nullopt when A is singular.
inline std::optional<std::vector<RationalFunction>> solve_linear_system_over_yfield(const YMatrix& a,
                                                                                   const std::vector<YPolynomial>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) {
        throw contract_violation("right-hand side length does not match matrix");
    }
    for (const auto& row : a) {
        if (row.size() != n) {
            throw contract_violation("matrix is not square");
        }
    }

    // Augmented matrix [A | b].
    YMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = a[i];
        m[i].push_back(b[i]);
    }

    YPolynomial prev(BigInt(1));
    for (std::size_t k = 0; k < n; ++k) {
        // Lowest-degree nonzero pivot keeps intermediate sizes down.
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (!m[i][k].is_zero() && (pivot == n || m[i][k].degree() < m[pivot][k].degree())) {
                pivot = i;
            }
        }
        if (pivot == n) {
            return std::nullopt;
        }
        std::swap(m[k], m[pivot]);
        const YPolynomial p = m[k][k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) {
                continue;
            }
            const YPolynomial f = m[i][k];
            for (std::size_t j = 0; j <= n; ++j) {
                if (j == k) {
                    continue;
                }
                m[i][j] = divexact(p * m[i][j] - f * m[k][j], prev);
            }
            m[i][k] = YPolynomial{};
        }
        prev = p;
    }

    std::vector<RationalFunction> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        x.push_back(make_rational_function(m[i][n], m[i][i]));
    }
    return x;
}

} // namespace colpart
