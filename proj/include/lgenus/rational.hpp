#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers on top of GMP.
 *
 * Every quantity in this library is an exact rational; no floating-point
 * representation exists anywhere. Values are kept in lowest terms with a
 * positive denominator, and the canonical text form is "num/den" with the
 * denominator omitted when it is 1.
 */

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "lgenus/errors.hpp"

namespace lgenus {

using BigInt = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // implicit, mirrors integer literals
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw non_unit_error("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "num/den" or "num" (canonical text form).
    static Rational from_string(const std::string& s) {
        try {
            mpq_class q(s, 10);
            if (q.get_den() == 0) throw non_unit_error("rational with zero denominator: " + s);
            q.canonicalize();
            Rational r;
            r.v_ = q;
            return r;
        } catch (const std::invalid_argument&) {
            throw invalid_input("not a rational: '" + s + "'");
        }
    }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw non_unit_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw non_unit_error("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(unsigned long e) const {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
        return Rational(mpq_class(r)); // already canonical: powers of coprimes are coprime
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

inline Rational ring_zero(const Rational&) { return Rational(); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline Rational ring_inverse(const Rational& c) {
    if (c.is_zero()) throw non_unit_error("leading coefficient is zero");
    return c.inverse();
}

} // namespace lgenus
