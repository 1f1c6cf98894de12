// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "ncdet/common.hpp"

namespace ncdet {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational.  Canonical form is maintained by the backing
// type: gcd(num, den) == 1 and den > 0, so operator== is exact value equality.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}            // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}        // NOLINT
    Rational(const BigInt& n, const BigInt& d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        // cpp_rational's two-argument constructor insists on d > 0.
        if (d < 0)
            v_ = boost::multiprecision::cpp_rational(-n, -d);
        else
            v_ = boost::multiprecision::cpp_rational(n, d);
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }

    Rational operator-() const { return Rational(-v_); }
    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DomainError("division by zero rational");
        return Rational(v_ / o.v_);
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    bool is_negative() const { return v_ < 0; }
    Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

    // "p" when the denominator is 1, "p/q" otherwise; minus sign leads.
    std::string str() const {
        std::string s = num().str();
        if (!is_integer()) s += "/" + den().str();
        return s;
    }

private:
    explicit Rational(const boost::multiprecision::cpp_rational& v) : v_(v) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational rational_pow(const Rational& a, unsigned e) {
    Rational acc(1);
    for (unsigned i = 0; i < e; ++i) acc *= a;
    return acc;
}

inline BigInt factorial(unsigned n) {
    BigInt acc(1);
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

} // namespace ncdet
