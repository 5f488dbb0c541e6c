#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series in one variable z over an exact coefficient ring.
 *
 * A series of order m is known modulo z^{m+1} and stores exactly m+1
 * coefficients. The truncation order travels with the value: combining two
 * series truncates the result to the smaller order, so precision can only
 * shrink, never silently inflate.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgenus/degree_poly.hpp"
#include "lgenus/errors.hpp"
#include "lgenus/rational.hpp"

namespace lgenus {

template <typename C>
class TruncSeries {
public:
    /// Takes ownership of the coefficient list; index = power of z.
    explicit TruncSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("series needs at least a constant term");
    }

    static TruncSeries zero(unsigned order, const C& like) {
        return TruncSeries(std::vector<C>(order + 1, ring_zero(like)));
    }

    static TruncSeries one(unsigned order, const C& like) {
        std::vector<C> c(order + 1, ring_zero(like));
        c[0] = ring_one(like);
        return TruncSeries(std::move(c));
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    const C& coeff(unsigned k) const {
        if (k >= coeffs_.size())
            throw std::out_of_range("coefficient index " + std::to_string(k) +
                                    " exceeds series order " + std::to_string(order()));
        return coeffs_[k];
    }

    const std::vector<C>& coeffs() const { return coeffs_; }

    TruncSeries truncated(unsigned new_order) const {
        if (new_order >= order()) return *this;
        return TruncSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    friend TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) {
        unsigned n = std::min(f.order(), g.order());
        std::vector<C> out;
        out.reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) out.push_back(f.coeffs_[k] + g.coeffs_[k]);
        return TruncSeries(std::move(out));
    }

    friend TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) {
        unsigned n = std::min(f.order(), g.order());
        std::vector<C> out;
        out.reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) out.push_back(f.coeffs_[k] - g.coeffs_[k]);
        return TruncSeries(std::move(out));
    }

    /// Cauchy product truncated at the smaller operand order.
    friend TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) {
        unsigned n = std::min(f.order(), g.order());
        std::vector<C> out;
        out.reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            C acc = f.coeffs_[0] * g.coeffs_[k];
            for (unsigned i = 1; i <= k; ++i) acc += f.coeffs_[i] * g.coeffs_[k - i];
            out.push_back(std::move(acc));
        }
        return TruncSeries(std::move(out));
    }

private:
    std::vector<C> coeffs_;
};

using QSeries = TruncSeries<Rational>;
using PolySeries = TruncSeries<DegreePoly>;

/// Multiplicative inverse by the triangular recurrence
/// b_0 = a_0^{-1}, b_k = -b_0 * sum_{i=1..k} a_i b_{k-i}.
/// Requires the constant term to be a unit.
template <typename C>
TruncSeries<C> inverse(const TruncSeries<C>& f) {
    const C b0 = ring_inverse(f.coeff(0));
    std::vector<C> b;
    b.reserve(f.order() + 1);
    b.push_back(b0);
    for (unsigned k = 1; k <= f.order(); ++k) {
        C acc = f.coeff(1) * b[k - 1];
        for (unsigned i = 2; i <= k; ++i) acc += f.coeff(i) * b[k - i];
        b.push_back(-(b0 * acc));
    }
    return TruncSeries<C>(std::move(b));
}

/// f^k by binary exponentiation; agrees with the k-fold product since the
/// arithmetic is exact.
template <typename C>
TruncSeries<C> pow(const TruncSeries<C>& f, unsigned k) {
    TruncSeries<C> result = TruncSeries<C>::one(f.order(), f.coeff(0));
    TruncSeries<C> base = f;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

/// Substitution z -> c*z: the k-th coefficient is multiplied by c^k.
template <typename C>
TruncSeries<C> scale_argument(const TruncSeries<C>& f, const C& c) {
    std::vector<C> out;
    out.reserve(f.order() + 1);
    C scale = ring_one(c);
    for (unsigned k = 0; k <= f.order(); ++k) {
        out.push_back(f.coeff(k) * scale);
        if (k < f.order()) scale = scale * c;
    }
    return TruncSeries<C>(std::move(out));
}

/// Lifts a rational-coefficient series into the polynomial coefficient ring.
inline PolySeries promote(const QSeries& f, unsigned arity) {
    std::vector<DegreePoly> out;
    out.reserve(f.order() + 1);
    for (unsigned k = 0; k <= f.order(); ++k)
        out.push_back(DegreePoly::constant(arity, f.coeff(k)));
    return PolySeries(std::move(out));
}

/// Substituting a symbolic scale promotes the coefficients to polynomials.
inline PolySeries scale_argument(const QSeries& f, const DegreePoly& c) {
    return scale_argument(promote(f, c.arity()), c);
}

} // namespace lgenus
