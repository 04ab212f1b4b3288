#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace colpart {

using BigInt = mpz_class;

inline bool is_zero_value(const BigInt& v) { return sgn(v) == 0; }

// Dense univariate polynomial over a commutative ring. Index i of the
// coefficient vector holds the coefficient of t^i. Trailing zeros are
// always trimmed, so the zero polynomial has no coefficients at all.
//
// Nesting is intended: Polynomial<Polynomial<BigInt>> is a polynomial in
// x whose coefficients are polynomials in y.
template <typename Coeff>
class Polynomial {
public:
    using coefficient_type = Coeff;

    Polynomial() = default;

    Polynomial(Coeff constant) { // NOLINT(google-explicit-constructor)
        coeffs_.push_back(std::move(constant));
        trim();
    }

    Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(Coeff c, std::size_t degree) {
        std::vector<Coeff> v(degree + 1);
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    std::size_t size() const noexcept { return coeffs_.size(); }

    std::span<const Coeff> coefficients() const noexcept { return coeffs_; }

    // Coefficient of t^i; zero beyond the degree.
    Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff{}; }

    const Coeff& operator[](std::size_t i) const { return coeffs_.at(i); }

    // Terms of degree < n.
    Polynomial truncated(std::size_t n) const {
        if (n >= coeffs_.size()) {
            return *this;
        }
        return Polynomial(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
    }

    // Multiply by t^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero() || k == 0) {
            return *this;
        }
        std::vector<Coeff> v(k);
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(v));
    }

    // *this += c * t^k * o, in place.
    Polynomial& add_scaled_shifted(const Polynomial& o, const Coeff& c, std::size_t k) {
        if (o.is_zero() || is_zero_value(c)) {
            return *this;
        }
        if (o.coeffs_.size() + k > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size() + k);
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i + k] += c * o.coeffs_[i];
        }
        trim();
        return *this;
    }

    // *this += t^k * o, in place.
    Polynomial& add_shifted(const Polynomial& o, std::size_t k) {
        if (o.is_zero()) {
            return *this;
        }
        if (o.coeffs_.size() + k > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size() + k);
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i + k] += o.coeffs_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }

    // Scale by a ring element.
    Polynomial& operator*=(const Coeff& c) {
        for (auto& v : coeffs_) {
            v *= c;
        }
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator-(Polynomial a) {
        for (auto& v : a.coeffs_) {
            v = -v;
        }
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero_value(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
    friend Polynomial operator*(const Coeff& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && is_zero_value(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<Coeff> coeffs_;
};

template <typename Coeff>
bool is_zero_value(const Polynomial<Coeff>& p) {
    return p.is_zero();
}

using YPolynomial = Polynomial<BigInt>;
using XYPolynomial = Polynomial<YPolynomial>;

// The variable itself.
inline YPolynomial y_var() { return YPolynomial::monomial(BigInt(1), 1); }
inline XYPolynomial x_var() { return XYPolynomial::monomial(YPolynomial(BigInt(1)), 1); }

// p(1): the sum of coefficients.
inline BigInt eval_at_one(const YPolynomial& p) {
    BigInt s = 0;
    for (const auto& c : p.coefficients()) {
        s += c;
    }
    return s;
}

// p'(1) = sum of i * c_i.
inline BigInt derivative_at_one(const YPolynomial& p) {
    BigInt s = 0;
    const auto cs = p.coefficients();
    for (std::size_t i = 1; i < cs.size(); ++i) {
        s += BigInt(static_cast<unsigned long>(i)) * cs[i];
    }
    return s;
}

inline YPolynomial derivative(const YPolynomial& p) {
    const auto cs = p.coefficients();
    if (cs.size() <= 1) {
        return {};
    }
    std::vector<BigInt> out(cs.size() - 1);
    for (std::size_t i = 1; i < cs.size(); ++i) {
        out[i - 1] = BigInt(static_cast<unsigned long>(i)) * cs[i];
    }
    return YPolynomial(std::move(out));
}

// Substitute y := 1 coefficientwise.
inline Polynomial<BigInt> eval_y_at_one(const XYPolynomial& p) {
    std::vector<BigInt> out;
    out.reserve(p.size());
    for (const auto& c : p.coefficients()) {
        out.push_back(eval_at_one(c));
    }
    return Polynomial<BigInt>(std::move(out));
}

// Partial derivative in y, then y := 1.
inline Polynomial<BigInt> dy_at_one(const XYPolynomial& p) {
    std::vector<BigInt> out;
    out.reserve(p.size());
    for (const auto& c : p.coefficients()) {
        out.push_back(derivative_at_one(c));
    }
    return Polynomial<BigInt>(std::move(out));
}

// gcd of all integer coefficients, always >= 0.
inline BigInt content(const YPolynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

inline BigInt content(const XYPolynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coefficients()) {
        const BigInt h = content(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    }
    return g;
}

// Divide every coefficient by d; d must divide each one.
inline YPolynomial divexact(const YPolynomial& p, const BigInt& d) {
    std::vector<BigInt> out(p.coefficients().begin(), p.coefficients().end());
    for (auto& c : out) {
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return YPolynomial(std::move(out));
}

inline XYPolynomial divexact(const XYPolynomial& p, const BigInt& d) {
    std::vector<YPolynomial> out;
    out.reserve(p.size());
    for (const auto& c : p.coefficients()) {
        out.push_back(divexact(c, d));
    }
    return XYPolynomial(std::move(out));
}

// Quotient a / b in Z[y] when b divides a exactly. Throws if it does not.
inline YPolynomial divexact(const YPolynomial& a, const YPolynomial& b) {
    if (b.is_zero()) {
        throw contract_violation("polynomial division by zero");
    }
    if (a.is_zero()) {
        return {};
    }
    if (a.degree() < b.degree()) {
        throw contract_violation("inexact polynomial division");
    }
    std::vector<BigInt> rem(a.coefficients().begin(), a.coefficients().end());
    const auto bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const BigInt& lead = bc[db];
    std::vector<BigInt> quot(rem.size() - db);
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigInt& top = rem[i + db];
        if (sgn(top) == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            throw contract_violation("inexact polynomial division");
        }
        BigInt q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i + j] -= q * bc[j];
        }
        quot[i] = std::move(q);
    }
    for (const auto& r : rem) {
        if (sgn(r) != 0) {
            throw contract_violation("inexact polynomial division");
        }
    }
    return YPolynomial(std::move(quot));
}

// Primitive part with positive leading coefficient.
inline YPolynomial primitive_part(const YPolynomial& p) {
    if (p.is_zero()) {
        return p;
    }
    BigInt c = content(p);
    if (sgn(p.coefficients().back()) < 0) {
        c = -c;
    }
    return divexact(p, c);
}

// gcd in Z[y] via the primitive polynomial remainder sequence; the result
// is primitive with positive leading coefficient (or zero).
inline YPolynomial gcd(const YPolynomial& a, const YPolynomial& b) {
    if (a.is_zero()) {
        return primitive_part(b);
    }
    if (b.is_zero()) {
        return primitive_part(a);
    }
    BigInt cont;
    {
        const BigInt ca = content(a);
        const BigInt cb = content(b);
        mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
    YPolynomial u = primitive_part(a);
    YPolynomial v = primitive_part(b);
    if (u.degree() < v.degree()) {
        std::swap(u, v);
    }
    while (!v.is_zero()) {
        // Pseudo-remainder of u by v.
        std::vector<BigInt> r(u.coefficients().begin(), u.coefficients().end());
        const auto vc = v.coefficients();
        const std::size_t dv = vc.size() - 1;
        const BigInt& lead = vc[dv];
        for (std::size_t top = r.size(); top-- > dv;) {
            const BigInt t = r[top];
            for (auto& c : r) {
                c *= lead;
            }
            for (std::size_t j = 0; j <= dv; ++j) {
                r[top - dv + j] -= t * vc[j];
            }
        }
        YPolynomial rem(std::move(r));
        u = std::move(v);
        v = primitive_part(rem);
    }
    return cont * u;
}

} // namespace colpart
