#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "errors.hpp"
#include "polynomial.hpp"

namespace colpart {

// Exact rational, always reduced with a positive denominator.
class BigRational {
public:
    BigRational() = default;

    BigRational(const BigInt& num, const BigInt& den) {
        if (sgn(den) == 0) {
            throw contract_violation("rational with zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit BigRational(const BigInt& integer) : value_(integer) {}

    explicit BigRational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    const mpq_class& value() const noexcept { return value_; }

    // "p/q", or just "p" when q = 1.
    std::string str() const {
        if (value_.get_den() == 1) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.value_ < b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

} // namespace colpart
