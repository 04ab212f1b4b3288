#pragma once

#include <string>

#include "gf.hpp"
#include "poly_parse.hpp"
#include "rational.hpp"

// Published closed forms and expansions that the engines must reproduce,
// kept as the literal text they were typeset in and expanded on load.

namespace colpart::reference {

struct ReferenceForms {
    // K_3 x P_n, two colors.
    std::string k3_numerator = "2 x y (1 + 3 y - x (3 - 7 y + 4 y^2))";
    std::string k3_denominator = "1 - x (4 + 3 y + y^2) + x^2 (3 - 7 y + 3 y^2 + y^3)";
    std::string k3_expansion =
        "(2 y + 6 y^2) x + (2 y + 44 y^2 + 12 y^3 + 6 y^4) x^2 + (2 y + "
        "178 y^2 + 218 y^3 + 84 y^4 + 24 y^5 + 6 y^6) x^3 "
        "+ (2 y + 600 y^2 + 1674 y^3 + 1100 y^4 + 528 y^5 + 150 y^6 + 36 y^7 + "
        "6 y^8) x^4";
    // [x^n] T(x, 1) = base^n.
    long k3_total_base = 8;
    // Number of 2-colored partitions of K_3 x P_3 with six parts.
    long k3_n3_six_parts = 6;
    // Mean part count 2^(3n - 5) (a + b n) / 2^(3n).
    long k3_expected_a = 37;
    long k3_expected_b = 19;
    long k3_expected_shift = 5;

    // The 2 x n grid (P_2 x P_n), two colors.
    std::string grid2_numerator = "2xy(1+y-x(1-y)(1-2y))";
    std::string grid2_denominator = "1-x (2+y+y^2)+x^2(1-y) (1-5y^2-2y(1-2y))";
    std::string grid2_expansion =
        "(2 y + 2 y^2) x + (2 y + 12 y^2 + 2 y^4) x^2 + (2 y + 30 y^2 + "
        "18 y^3 + 12 y^4 + 2 y^6) x^3 "
        "+ (2 y + 56 y^2 + 102 y^3 + 56 y^4 + "
        "24 y^5 + 14 y^6 + 2 y^8) x^4";
    // Tilings of the 2 x 3 grid with exactly four polyominoes.
    long grid2_n3_four_parts = 12;

    // A single row of n cells: runs of equal colors.
    std::string path1_denominator = "1 - x (1 + y)";
};

inline RationalGF k3_gf(const ReferenceForms& r) {
    return {parse_xy_polynomial(r.k3_numerator), parse_xy_polynomial(r.k3_denominator)};
}

inline RationalGF grid2_gf(const ReferenceForms& r) {
    return {parse_xy_polynomial(r.grid2_numerator), parse_xy_polynomial(r.grid2_denominator)};
}

// 2^(3n - shift) (a + b n) / 2^(3n), exact for every n >= 1.
inline BigRational k3_expected_size(const ReferenceForms& r, long n) {
    const long e = 3 * n - r.k3_expected_shift;
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    const mpq_class scale = e < 0 ? mpq_class(BigInt(1), p) : mpq_class(p);
    BigInt whole;
    mpz_ui_pow_ui(whole.get_mpz_t(), 2, static_cast<unsigned long>(3 * n));
    mpq_class value = scale * mpq_class(BigInt(r.k3_expected_a + r.k3_expected_b * n)) / mpq_class(whole);
    return BigRational(value);
}

} // namespace colpart::reference
