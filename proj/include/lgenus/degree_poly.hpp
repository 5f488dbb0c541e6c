#pragma once

/**
 * @file degree_poly.hpp
 * @brief Multivariate polynomials in degree symbols d1..dr over the rationals.
 *
 * Terms are keyed by exponent vectors ordered by total degree, then
 * lexicographically, which makes serialization deterministic. Zero
 * coefficients are never stored. Arity 0 degenerates to a single rational.
 */

#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "lgenus/errors.hpp"
#include "lgenus/rational.hpp"

namespace lgenus {

class DegreePoly {
public:
    using Exponents = std::vector<unsigned>;

    struct TermOrder {
        bool operator()(const Exponents& a, const Exponents& b) const {
            unsigned ta = std::accumulate(a.begin(), a.end(), 0u);
            unsigned tb = std::accumulate(b.begin(), b.end(), 0u);
            if (ta != tb) return ta < tb;
            return a < b;
        }
    };

    using TermMap = std::map<Exponents, Rational, TermOrder>;

    explicit DegreePoly(unsigned arity = 0) : arity_(arity) {}

    static DegreePoly constant(unsigned arity, const Rational& c) {
        DegreePoly p(arity);
        if (!c.is_zero()) p.terms_.emplace(Exponents(arity, 0), c);
        return p;
    }

    /// The symbol d_{index+1}, index in [0, arity).
    static DegreePoly variable(unsigned arity, unsigned index) {
        if (index >= arity) throw kind_mismatch("variable index out of arity range");
        DegreePoly p(arity);
        Exponents e(arity, 0);
        e[index] = 1;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    unsigned arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const auto& e = terms_.begin()->first;
        return std::accumulate(e.begin(), e.end(), 0u) == 0;
    }

    Rational constant_term() const {
        auto it = terms_.find(Exponents(arity_, 0));
        return it == terms_.end() ? Rational() : it->second;
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational() : it->second;
    }

    unsigned total_degree() const {
        unsigned deg = 0;
        for (const auto& [e, c] : terms_)
            deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0u));
        return deg;
    }

    DegreePoly& operator+=(const DegreePoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    DegreePoly& operator-=(const DegreePoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    DegreePoly operator-() const {
        DegreePoly r(arity_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend DegreePoly operator+(DegreePoly a, const DegreePoly& b) { return a += b; }
    friend DegreePoly operator-(DegreePoly a, const DegreePoly& b) { return a -= b; }

    friend DegreePoly operator*(const DegreePoly& a, const DegreePoly& b) {
        a.check_arity(b);
        DegreePoly r(a.arity_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.arity_);
                for (unsigned i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    DegreePoly& operator*=(const DegreePoly& o) { return *this = *this * o; }

    friend DegreePoly operator*(const DegreePoly& a, const Rational& s) {
        DegreePoly r(a.arity_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
        return r;
    }
    friend DegreePoly operator*(const Rational& s, const DegreePoly& a) { return a * s; }

    DegreePoly pow(unsigned k) const {
        DegreePoly r = constant(arity_, Rational(1));
        DegreePoly base = *this;
        while (k > 0) {
            if (k & 1u) r *= base;
            k >>= 1u;
            if (k > 0) base *= base;
        }
        return r;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != arity_) throw kind_mismatch("evaluation point has wrong arity");
        Rational out;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (unsigned i = 0; i < arity_; ++i)
                if (e[i] > 0) t *= point[i].pow(e[i]);
            out += t;
        }
        return out;
    }

    friend bool operator==(const DegreePoly& a, const DegreePoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DegreePoly& a, const DegreePoly& b) { return !(a == b); }

    /// Canonical text form, terms in increasing (total degree, lex) order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) { os << "-"; a = -a; }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            first = false;
            std::string mono = monomial_string(e);
            if (mono.empty()) {
                os << a.to_string();
            } else {
                if (!(a == Rational(1))) os << a.to_string() << "*";
                os << mono;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const DegreePoly& p) {
        return os << p.to_string();
    }

private:
    void check_arity(const DegreePoly& o) const {
        if (arity_ != o.arity_)
            throw kind_mismatch("degree polynomials of arity " + std::to_string(arity_) +
                                " and " + std::to_string(o.arity_));
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string monomial_string(const Exponents& e) const {
        std::ostringstream os;
        bool any = false;
        for (unsigned i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (any) os << "*";
            any = true;
            if (arity_ == 1) os << "d";
            else os << "d" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
        return os.str();
    }

    unsigned arity_;
    TermMap terms_;
};

inline DegreePoly ring_zero(const DegreePoly& like) { return DegreePoly(like.arity()); }
inline DegreePoly ring_one(const DegreePoly& like) {
    return DegreePoly::constant(like.arity(), Rational(1));
}
inline DegreePoly ring_inverse(const DegreePoly& c) {
    if (!c.is_constant() || c.constant_term().is_zero())
        throw non_unit_error("polynomial leading coefficient is not an invertible constant");
    return DegreePoly::constant(c.arity(), c.constant_term().inverse());
}

} // namespace lgenus
