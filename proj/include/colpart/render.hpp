#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"
#include "polynomial.hpp"
#include "transfer.hpp"

// Text, LaTeX and JSON renderings. JSON carries every integer as a decimal
// string so consumers never truncate to 64 bits.

namespace colpart {

namespace detail {

inline std::string y_power(std::size_t i, bool latex) {
    if (i == 0) {
        return "";
    }
    if (i == 1) {
        return "y";
    }
    return latex ? "y^{" + std::to_string(i) + "}" : "y^" + std::to_string(i);
}

inline std::string render_y(const YPolynomial& p, bool latex) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto cs = p.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (sgn(cs[i]) == 0) {
            continue;
        }
        const bool negative = sgn(cs[i]) < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const BigInt mag = abs(cs[i]);
        if (i == 0 || mag != 1) {
            out += mag.get_str();
            if (i > 0 && latex) {
                out += " ";
            }
        }
        out += y_power(i, latex);
    }
    return out;
}

inline bool is_single_term(const YPolynomial& p) {
    std::size_t nonzero = 0;
    for (const auto& c : p.coefficients()) {
        nonzero += sgn(c) != 0 ? 1 : 0;
    }
    return nonzero == 1;
}

inline std::string x_power(std::size_t n, bool latex) {
    if (n == 1) {
        return "x";
    }
    return latex ? "x^{" + std::to_string(n) + "}" : "x^" + std::to_string(n);
}

inline std::string render_xy(const XYPolynomial& p, bool latex) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto cs = p.coefficients();
    for (std::size_t n = 0; n < cs.size(); ++n) {
        if (cs[n].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (n == 0) {
            out += render_y(cs[n], latex);
        } else if (cs[n] == YPolynomial(BigInt(1))) {
            out += x_power(n, latex);
        } else if (is_single_term(cs[n]) && sgn(cs[n].coefficients().back()) > 0) {
            out += render_y(cs[n], latex) + " " + x_power(n, latex);
        } else {
            out += "(" + render_y(cs[n], latex) + ") " + x_power(n, latex);
        }
    }
    return out;
}

} // namespace detail

inline std::string to_text(const YPolynomial& p) { return detail::render_y(p, false); }
inline std::string to_latex(const YPolynomial& p) { return detail::render_y(p, true); }
inline std::string to_text(const XYPolynomial& p) { return detail::render_xy(p, false); }
inline std::string to_latex(const XYPolynomial& p) { return detail::render_xy(p, true); }

// "x^1: 2y + 6y^2 ; x^2: ..." for n = 1..n_max.
inline std::string series_text(const SeriesInX& s) {
    std::string out;
    for (std::size_t n = 1; n <= s.n_max(); ++n) {
        if (n > 1) {
            out += " ; ";
        }
        out += "x^" + std::to_string(n) + ": " + to_text(s.term(n));
    }
    return out;
}

// "(2 y + 6 y^{2}) x + ... + O(x^{n_max+1})".
inline std::string series_latex(const SeriesInX& s) {
    std::string out;
    for (std::size_t n = 1; n <= s.n_max(); ++n) {
        const auto& t = s.term(n);
        if (t.is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += (detail::is_single_term(t) ? to_latex(t) : "(" + to_latex(t) + ")") + " " + detail::x_power(n, true);
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " + O(" + detail::x_power(s.n_max() + 1, true) + ")";
}

inline std::string gf_text(const RationalGF& g) {
    return "numerator: " + to_text(g.numerator) + "\ndenominator: " + to_text(g.denominator);
}

inline std::string gf_latex(const RationalGF& g) {
    return "\\frac{" + to_latex(g.numerator) + "}{" + to_latex(g.denominator) + "}";
}

inline nlohmann::json to_json(const YPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coefficients()) {
        arr.push_back(c.get_str());
    }
    return arr;
}

inline nlohmann::json to_json(const XYPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coefficients()) {
        arr.push_back(to_json(c));
    }
    return arr;
}

inline YPolynomial y_polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw parse_error("polynomial JSON must be an array of decimal strings");
    }
    std::vector<BigInt> cs;
    for (const auto& e : j) {
        if (!e.is_string()) {
            throw parse_error("polynomial coefficient must be a decimal string");
        }
        BigInt v;
        if (v.set_str(e.get<std::string>(), 10) != 0) {
            throw parse_error("invalid decimal coefficient '" + e.get<std::string>() + "'");
        }
        cs.push_back(std::move(v));
    }
    return YPolynomial(std::move(cs));
}

inline XYPolynomial xy_polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw parse_error("bivariate polynomial JSON must be an array of arrays");
    }
    std::vector<YPolynomial> cs;
    for (const auto& e : j) {
        cs.push_back(y_polynomial_from_json(e));
    }
    return XYPolynomial(std::move(cs));
}

} // namespace colpart
