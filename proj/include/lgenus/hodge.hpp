#pragma once

/**
 * @file hodge.hpp
 * @brief Hodge-theoretic signature oracles for smooth projective hypersurfaces.
 *
 * Two independent routes to the signature, both rooted in the graded pieces
 * of the Jacobian ring of the Fermat hypersurface sum y_i^d = 0 (Hodge
 * numbers of smooth hypersurfaces are deformation invariants, so the Fermat
 * model computes them all):
 *
 *  - hodge_numbers_hypersurface counts monomials of bounded exponent and
 *    feeds the Hodge index formula;
 *  - signature_genfun extracts one coefficient of a univariate generating
 *    function and never materializes the Hodge numbers.
 *
 * Both must agree with the L-class route for every (m, d).
 */

#include <vector>

#include "lgenus/errors.hpp"
#include "lgenus/rational.hpp"

namespace lgenus {

/// Primitive middle Hodge numbers h^{n-q,q}_prim, q = 0..n, of a smooth
/// degree-d hypersurface of dimension n.
struct HodgeNumbers {
    unsigned n = 0;
    long d = 1;
    std::vector<BigInt> primitive;
};

namespace detail {

/// Coefficients of (1 + t + ... + t^box)^parts up to degree max_deg.
inline std::vector<BigInt> box_power_coeffs(long box, unsigned parts, std::size_t max_deg) {
    std::vector<BigInt> acc(max_deg + 1, 0);
    acc[0] = 1;
    if (box < 0) return acc; // empty box: only the empty product survives
    for (unsigned p = 0; p < parts; ++p) {
        std::vector<BigInt> next(max_deg + 1, 0);
        for (std::size_t k = 0; k <= max_deg; ++k) {
            if (acc[k] == 0) continue;
            for (long i = 0; i <= box && k + static_cast<std::size_t>(i) <= max_deg; ++i)
                next[k + i] += acc[k];
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace detail

/// h^{n-q,q}_prim = #{ e in [0, d-2]^{n+2} : sum e_i = (q+1)d - n - 2 },
/// the dimension of the corresponding graded piece of the Fermat Jacobian
/// ring. d = 1 gives the hyperplane: no primitive middle cohomology.
inline HodgeNumbers hodge_numbers_hypersurface(unsigned n, long d) {
    if (d < 1) throw invalid_input("hypersurface degree must be >= 1");
    HodgeNumbers h;
    h.n = n;
    h.d = d;
    h.primitive.assign(n + 1, 0);
    if (d == 1) return h;
    std::size_t max_deg = static_cast<std::size_t>(d - 2) * (n + 2);
    std::vector<BigInt> counts = detail::box_power_coeffs(d - 2, n + 2, max_deg);
    for (unsigned q = 0; q <= n; ++q) {
        long target = static_cast<long>(q + 1) * d - static_cast<long>(n) - 2;
        if (target >= 0 && static_cast<std::size_t>(target) <= max_deg)
            h.primitive[q] = counts[static_cast<std::size_t>(target)];
    }
    return h;
}

/// Hodge index evaluation for the dimension-2m hypersurface:
/// sigma = 1 + sum_q (-1)^q h^{2m-q,q}_prim. The +1 absorbs the
/// non-primitive classes, which contribute sum_{i=0}^{2m} (-1)^i = 1.
inline BigInt signature_hodge_index(unsigned m, long d) {
    if (m < 1) throw invalid_input("signature needs dimension 2m with m >= 1");
    HodgeNumbers h = hodge_numbers_hypersurface(2 * m, d);
    BigInt sigma = 1;
    for (unsigned q = 0; q <= 2 * m; ++q) {
        if (q % 2 == 0) sigma += h.primitive[q];
        else sigma -= h.primitive[q];
    }
    return sigma;
}

/// Generating-function route. With N = 2m+2 and e = (m+1)d, let
///
///     Q = ((t^d - t)/(t - 1))^N = t^N (1 + t + ... + t^{d-2})^N,
///
/// the Poincare series of the Fermat Jacobian ring shifted by t^N, and
/// R = sum_{j=0}^{m-1} (-t^d)^j. Then
///
///     sigma = (-1)^m [t^e] ( Q * (1 + 2(-t^d)R) ) + 1.
///
/// The division (t^d - t)/(t - 1) is exact, so everything stays in Z[t].
inline BigInt signature_genfun(unsigned m, long d) {
    if (m < 1) throw invalid_input("signature needs dimension 2m with m >= 1");
    if (d < 1) throw invalid_input("hypersurface degree must be >= 1");
    const unsigned big_n = 2 * m + 2;
    const std::size_t e = static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(d);

    // factor = 1 + 2 * sum_{j=1}^{m} (-1)^j t^{jd}
    std::vector<BigInt> factor(e + 1, 0);
    factor[0] = 1;
    for (unsigned j = 1; j <= m; ++j) {
        std::size_t deg = static_cast<std::size_t>(j) * static_cast<std::size_t>(d);
        if (deg <= e) factor[deg] = (j % 2 == 1) ? -2 : 2;
    }

    BigInt coeff = 0;
    if (d >= 2) {
        // Q has valuation N; only degrees e - N and below matter in the box power.
        if (e >= big_n) {
            std::vector<BigInt> q = detail::box_power_coeffs(d - 2, big_n, e - big_n);
            for (std::size_t k = 0; k <= e - big_n; ++k) {
                if (q[k] == 0) continue;
                coeff += q[k] * factor[e - big_n - k];
            }
        }
    }
    // d == 1: Q = 0 identically.

    BigInt sigma = (m % 2 == 0) ? coeff : BigInt(-coeff);
    return sigma + 1;
}

} // namespace lgenus
