#pragma once

/**
 * @file charclass.hpp
 * @brief L-classes and signatures of projective spaces and smooth complete
 *        intersections, via the Hirzebruch function.
 *
 * The generating series is H(z) = sqrt(z)/tanh(sqrt(z)), expanded as the
 * quotient of the even and odd factorial series. The L-class of P^n is
 * H(z)^{n+1} truncated at z^{floor(n/2)}, z being the square of the
 * hyperplane class; a smooth complete intersection of multidegree
 * (d_1,...,d_r) in P^{2m+r} has
 *
 *     L = H(z)^{2m+r+1} * prod_i H(d_i^2 z)^{-1}   mod z^{m+1},
 *
 * and its signature is the top coefficient multiplied by the degree
 * d_1*...*d_r. The degrees may be symbolic, which yields the signature as an
 * exact polynomial in d_1,...,d_r.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgenus/degree_poly.hpp"
#include "lgenus/errors.hpp"
#include "lgenus/rational.hpp"
#include "lgenus/series.hpp"

namespace lgenus {

/// Smooth complete intersection of multidegree d_1..d_r in P^{2m+r};
/// r = 0 is P^{2m} itself. The variety has complex dimension 2m.
struct CompleteIntersectionSpec {
    unsigned m = 0;
    std::vector<long> degrees;

    unsigned r() const { return static_cast<unsigned>(degrees.size()); }
    unsigned dimension() const { return 2 * m; }

    void validate() const {
        for (long d : degrees)
            if (d < 1) throw invalid_input("complete intersection degrees must be >= 1");
    }
};

/// Coefficients of the L-class in the non-primitive cohomology Q[z]/(z^{m+1});
/// entry j is the component in H^{4j}. The constant term is always 1.
struct LClassVector {
    std::vector<Rational> values;
    unsigned m() const { return static_cast<unsigned>(values.size()) - 1; }
};

/// H(z) = (sum_k z^k/(2k)!) / (sum_k z^k/(2k+1)!) truncated at the given order.
inline QSeries hirzebruch_series(unsigned order) {
    std::vector<Rational> even, odd;
    even.reserve(order + 1);
    odd.reserve(order + 1);
    BigInt f;
    for (unsigned k = 0; k <= order; ++k) {
        mpz_fac_ui(f.get_mpz_t(), 2 * k);
        even.emplace_back(BigInt(1), f);
        mpz_fac_ui(f.get_mpz_t(), 2 * k + 1);
        odd.emplace_back(BigInt(1), f);
    }
    return QSeries(std::move(even)) * inverse(QSeries(std::move(odd)));
}

/// H(z)^{2m+r+1} * prod_i H(d_i^2 z)^{-1} at order m, over rational or
/// polynomial coefficients.
template <typename C>
TruncSeries<C> lclass_ci_series(unsigned m, const std::vector<C>& degrees) {
    QSeries h = hirzebruch_series(m);
    unsigned r = static_cast<unsigned>(degrees.size());
    if constexpr (std::is_same_v<C, Rational>) {
        TruncSeries<C> acc = pow(h, 2 * m + r + 1);
        for (const C& d : degrees) acc = acc * inverse(scale_argument(h, d * d));
        return acc;
    } else {
        unsigned arity = degrees.empty() ? 0 : degrees.front().arity();
        TruncSeries<C> acc = pow(promote(h, arity), 2 * m + r + 1);
        for (const C& d : degrees) acc = acc * inverse(scale_argument(promote(h, arity), d * d));
        return acc;
    }
}

/// L-class of P^n: H(z)^{n+1} mod z^{floor(n/2)+1}.
inline LClassVector lclass_pn(unsigned n) {
    unsigned m = n / 2;
    QSeries s = pow(hirzebruch_series(m), n + 1);
    return LClassVector{s.coeffs()};
}

inline LClassVector lclass_ci(const CompleteIntersectionSpec& spec) {
    spec.validate();
    std::vector<Rational> degs(spec.degrees.begin(), spec.degrees.end());
    return LClassVector{lclass_ci_series(spec.m, degs).coeffs()};
}

/// Signature = degree * top L-class coefficient; always an integer,
/// checked here because a non-integer value would mean an arithmetic bug.
inline Rational signature_ci(const CompleteIntersectionSpec& spec) {
    spec.validate();
    Rational sigma = lclass_ci(spec).values[spec.m];
    for (long d : spec.degrees) sigma *= Rational(d);
    if (!sigma.is_integer())
        throw internal_inconsistency("signature came out non-integral: " + sigma.to_string());
    return sigma;
}

/// The signature of a complete intersection of codimension r and dimension 2m
/// as an exact polynomial in the degree symbols d1..dr.
inline DegreePoly signature_poly(unsigned m, unsigned r) {
    if (r == 0) throw invalid_input("signature_poly needs at least one degree symbol");
    std::vector<DegreePoly> degs;
    degs.reserve(r);
    for (unsigned i = 0; i < r; ++i) degs.push_back(DegreePoly::variable(r, i));
    DegreePoly sigma = lclass_ci_series(m, degs).coeff(m);
    for (const DegreePoly& d : degs) sigma *= d;
    return sigma;
}

/// Image of the L-class of a smooth degree-d hypersurface Z in P^{n+1} under
/// the identification H_{2j}(P^{n+1}, Q) = Q: entry j is
/// d * coeff(H^{n+2} H(d^2 z)^{-1}, (n-j)/2) when n-j is even, else 0.
/// These components need not be integers.
inline std::map<unsigned, Rational> lclass_hypersurface_pushforward(unsigned n, long d) {
    if (n < 1) throw invalid_input("hypersurface dimension must be >= 1");
    if (d < 1) throw invalid_input("hypersurface degree must be >= 1");
    QSeries h = hirzebruch_series(n / 2);
    QSeries s = pow(h, n + 2) * inverse(scale_argument(h, Rational(d * d)));
    std::map<unsigned, Rational> out;
    for (unsigned j = 0; j <= n; ++j) {
        if ((n - j) % 2 == 0)
            out[j] = Rational(d) * s.coeff((n - j) / 2);
        else
            out[j] = Rational(0);
    }
    return out;
}

/// Outcome of a positivity scan over one L-class vector. Carries the exact
/// coefficients and, on failure, the first offending index.
struct PositivityReport {
    unsigned m = 0;
    std::vector<long> degrees;           // empty for projective space
    std::vector<Rational> coefficients;
    bool pass = true;
    std::optional<unsigned> first_failing_j;
    std::optional<Rational> failing_coefficient;
    bool side_condition_applicable = false;
    bool side_condition_holds = true;    // sum of degrees >= dimension + codimension
};

/// Checks L^{2j}(P^{2m}) > 0 for all j in [0, m].
inline PositivityReport check_pn_positivity(unsigned m) {
    PositivityReport rep;
    rep.m = m;
    rep.coefficients = lclass_pn(2 * m).values;
    for (unsigned j = 0; j < rep.coefficients.size(); ++j) {
        if (rep.coefficients[j].sign() <= 0) {
            rep.pass = false;
            rep.first_failing_j = j;
            rep.failing_coefficient = rep.coefficients[j];
            break;
        }
    }
    return rep;
}

/// Checks the alternating positivity (-1)^j L^{2j}(X) > 0 for a smooth
/// complete intersection. The heuristic side condition
/// sum d_i >= dim + codim is recorded but never enforced; the check runs
/// either way and the report flags when the condition fails.
inline PositivityReport check_ci_alternating_positivity(const CompleteIntersectionSpec& spec) {
    if (spec.degrees.empty())
        throw invalid_input("alternating positivity check needs at least one degree");
    PositivityReport rep;
    rep.m = spec.m;
    rep.degrees = spec.degrees;
    rep.coefficients = lclass_ci(spec).values;
    rep.side_condition_applicable = true;
    long sum = 0;
    for (long d : spec.degrees) sum += d;
    rep.side_condition_holds = sum >= static_cast<long>(spec.dimension() + spec.r());
    for (unsigned j = 0; j < rep.coefficients.size(); ++j) {
        Rational signed_coeff = (j % 2 == 0) ? rep.coefficients[j] : -rep.coefficients[j];
        if (signed_coeff.sign() <= 0) {
            rep.pass = false;
            rep.first_failing_j = j;
            rep.failing_coefficient = rep.coefficients[j];
            break;
        }
    }
    return rep;
}

} // namespace lgenus
