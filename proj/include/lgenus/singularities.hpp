#pragma once

/**
 * @file singularities.hpp
 * @brief Spectral pairs of isolated quasi-homogeneous hypersurface
 *        singularities and the local signature invariants derived from them.
 *
 * A Brieskorn-Pham germ x_1^{a_1} + ... + x_{n+1}^{a_{n+1}} has vanishing
 * cohomology of dimension mu = prod (a_i - 1), with spectral pairs
 * (alpha, w) = (sum k_i/a_i, n+1 or n) for k_i in [1, a_i - 1]; the weight is
 * n+1 exactly when alpha is an integer (the monodromy-eigenvalue-1 sector).
 *
 * From the pairs we build per-sector tables of Hodge-graded dimensions, their
 * N-primitive parts, the signatures sigma^j per weight, the weight-graded
 * cohomology of the singularity link, and the local invariant sigma-tilde
 * measuring the degree-0 discrepancy between the constant-coefficient and
 * intersection-complex L-classes.
 *
 * General isolated singularities enter through explicit spectral-pair sets
 * with arbitrary weights; the N-primitive differencing then does real work.
 */

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "lgenus/charclass.hpp"
#include "lgenus/errors.hpp"
#include "lgenus/rational.hpp"

namespace lgenus {

/// Brieskorn-Pham exponents a_1..a_{n+1}, all >= 2. The germ dimension is n.
struct BPSpec {
    std::vector<long> exponents;

    unsigned n() const { return static_cast<unsigned>(exponents.size()) - 1; }

    void validate() const {
        if (exponents.empty()) throw invalid_spec("at least one exponent required");
        for (long a : exponents)
            if (a < 2) throw invalid_spec("Brieskorn-Pham exponents must be >= 2");
    }
};

/// Finite multiset of spectral pairs (alpha, weight) with multiplicities,
/// for a germ of dimension n. Kept sorted by ascending alpha, then weight.
class SpectralPairSet {
public:
    struct Entry {
        Rational alpha;
        int weight;
        long long mult;
    };

    SpectralPairSet(unsigned n, std::vector<Entry> entries) : n_(n) {
        std::map<std::pair<Rational, int>, long long, PairLess> merged;
        for (const Entry& e : entries) {
            if (e.mult <= 0) throw invalid_input("spectral pair multiplicity must be positive");
            if (!(e.alpha > Rational(0)) || !(e.alpha < Rational(static_cast<long>(n) + 1)))
                throw invalid_input("spectral exponent " + e.alpha.to_string() +
                                    " outside the open interval (0, n+1)");
            merged[{e.alpha, e.weight}] += e.mult;
        }
        entries_.reserve(merged.size());
        for (const auto& [key, mult] : merged)
            entries_.push_back(Entry{key.first, key.second, mult});
    }

    unsigned n() const { return n_; }
    const std::vector<Entry>& entries() const { return entries_; }

    long long total_multiplicity() const {
        long long t = 0;
        for (const Entry& e : entries_) t += e.mult;
        return t;
    }

    /// True when every weight follows the quasi-homogeneous rule:
    /// w = n+1 for integral alpha, w = n otherwise.
    bool quasi_homogeneous() const {
        for (const Entry& e : entries_) {
            int expected = e.alpha.is_integer() ? static_cast<int>(n_) + 1 : static_cast<int>(n_);
            if (e.weight != expected) return false;
        }
        return true;
    }

private:
    struct PairLess {
        bool operator()(const std::pair<Rational, int>& a,
                        const std::pair<Rational, int>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        }
    };

    unsigned n_;
    std::vector<Entry> entries_;
};

/// Spectrum of the one-variable germ x^a: {k/a : k in [1, a-1]}, n = 0.
inline SpectralPairSet one_variable_spectrum(long a) {
    if (a < 2) throw invalid_spec("Brieskorn-Pham exponents must be >= 2");
    std::vector<SpectralPairSet::Entry> entries;
    entries.reserve(a - 1);
    for (long k = 1; k < a; ++k)
        entries.push_back({Rational(k, a), Rational(k, a).is_integer() ? 1 : 0, 1});
    return SpectralPairSet(0, std::move(entries));
}

/// Join of two quasi-homogeneous spectra: exponents add, the germ dimension
/// becomes n1 + n2 + 1, and weights are reassigned by the integrality rule.
inline SpectralPairSet ts_join(const SpectralPairSet& s1, const SpectralPairSet& s2) {
    if (!s1.quasi_homogeneous() || !s2.quasi_homogeneous())
        throw unsupported_join("join is only defined for quasi-homogeneous spectra");
    unsigned n = s1.n() + s2.n() + 1;
    std::vector<SpectralPairSet::Entry> entries;
    entries.reserve(s1.entries().size() * s2.entries().size());
    for (const auto& e1 : s1.entries())
        for (const auto& e2 : s2.entries()) {
            Rational alpha = e1.alpha + e2.alpha;
            int w = alpha.is_integer() ? static_cast<int>(n) + 1 : static_cast<int>(n);
            entries.push_back({alpha, w, e1.mult * e2.mult});
        }
    return SpectralPairSet(n, std::move(entries));
}

/// Spectral pairs of a Brieskorn-Pham germ, as the iterated join of its
/// one-variable spectra. Total multiplicity is prod (a_i - 1).
inline SpectralPairSet bp_spectral_pairs(const BPSpec& spec) {
    spec.validate();
    SpectralPairSet acc = one_variable_spectrum(spec.exponents[0]);
    for (std::size_t i = 1; i < spec.exponents.size(); ++i)
        acc = ts_join(acc, one_variable_spectrum(spec.exponents[i]));
    return acc;
}

/// Per-eigenvalue-sector tables of Hodge-graded dimensions, keyed by
/// (Hodge level p, weight w), with the derived N-primitive tables.
///
/// The unipotent (eigenvalue 1) sector is centered at weight n+1, the
/// non-unipotent one at weight n. The primitive part at weight c+k is
///
///     dim Gr_F^p P Gr^W_{c+k} = dim Gr_F^p Gr^W_{c+k}
///                             - dim Gr_F^{p+1} Gr^W_{c+k+2}   (k >= 0),
///
/// and vanishes for weights below the center.
struct SectorTable {
    unsigned n = 0;
    std::map<std::pair<int, int>, long long> unipotent;
    std::map<std::pair<int, int>, long long> nonunipotent;
    std::map<std::pair<int, int>, long long> primitive_unipotent;
    std::map<std::pair<int, int>, long long> primitive_nonunipotent;
    long long total_dimension = 0;
};

namespace detail {

inline std::map<std::pair<int, int>, long long>
primitive_table(const std::map<std::pair<int, int>, long long>& full, int center) {
    auto dim_at = [&full](int p, int w) {
        auto it = full.find({p, w});
        return it == full.end() ? 0ll : it->second;
    };
    // Candidate positions: every stored cell plus every cell two weights
    // below one, so a difference against an absent cell is still checked.
    std::set<std::pair<int, int>> keys;
    for (const auto& [key, dim] : full) {
        auto [p, w] = key;
        if (w >= center) keys.insert({p, w});
        if (w - 2 >= center) keys.insert({p - 1, w - 2});
    }
    std::map<std::pair<int, int>, long long> prim;
    for (const auto& [p, w] : keys) {
        long long val = dim_at(p, w) - dim_at(p + 1, w + 2);
        if (val < 0)
            throw invalid_input("spectral pair set is not a valid monodromy weight structure: "
                                "negative primitive dimension at (p=" + std::to_string(p) +
                                ", w=" + std::to_string(w) + ")");
        if (val != 0) prim[{p, w}] = val;
    }
    return prim;
}

} // namespace detail

/// Sorts spectral pairs into eigenvalue sectors. Integral alpha lands in the
/// unipotent sector with Hodge level p = n+1-alpha, fractional alpha in the
/// non-unipotent sector with p = n - floor(alpha).
inline SectorTable sector_table(const SpectralPairSet& sp) {
    SectorTable t;
    t.n = sp.n();
    const long n = static_cast<long>(sp.n());
    for (const auto& e : sp.entries()) {
        if (e.alpha.is_integer()) {
            long p = n + 1 - e.alpha.num().get_si();
            t.unipotent[{static_cast<int>(p), e.weight}] += e.mult;
        } else {
            BigInt fl = e.alpha.num() / e.alpha.den(); // floor: alpha > 0
            long p = n - fl.get_si();
            t.nonunipotent[{static_cast<int>(p), e.weight}] += e.mult;
        }
        t.total_dimension += e.mult;
    }
    t.primitive_unipotent = detail::primitive_table(t.unipotent, static_cast<int>(n) + 1);
    t.primitive_nonunipotent = detail::primitive_table(t.nonunipotent, static_cast<int>(n));
    return t;
}

/// Hodge signatures of the N-primitive weight-graded pieces, per weight j:
/// sigma = sum_p (-1)^p dim Gr_F^p. Missing entries mean 0.
struct SigmaPair {
    long long unipotent = 0;
    long long nonunipotent = 0;
};

inline std::map<int, SigmaPair> sigma_table(const SectorTable& t) {
    std::map<int, SigmaPair> out;
    for (const auto& [key, dim] : t.primitive_unipotent) {
        auto [p, w] = key;
        out[w].unipotent += (p % 2 == 0 ? dim : -dim);
    }
    for (const auto& [key, dim] : t.primitive_nonunipotent) {
        auto [p, w] = key;
        out[w].nonunipotent += (p % 2 == 0 ? dim : -dim);
    }
    return out;
}

/// Weight-graded Hodge numbers of H^{n-1} of the singularity link:
/// weight n-1-k is the primitive unipotent piece of weight n+1+k, Tate
/// twisted k+1 times (each twist drops the weight by 2 and every Hodge
/// level by 1). Returns weight -> (p -> dimension).
inline std::map<int, std::map<int, long long>> link_cohomology(const SectorTable& t) {
    std::map<int, std::map<int, long long>> out;
    const int n = static_cast<int>(t.n);
    for (const auto& [key, dim] : t.primitive_unipotent) {
        auto [p, w] = key;
        int k = w - (n + 1);
        if (k < 0) continue; // primitive parts vanish below the center
        out[n - 1 - k][p - (k + 1)] += dim;
    }
    return out;
}

/// The reduced modified Hodge signature of an isolated hypersurface germ:
/// the stalk contributes Q in degree 0 (whose +1 cancels the normalization
/// constant) and the link cohomology in degree n-1, of which only even
/// weights count, each class entering with sign (-1)^{(n-1)+p}.
/// Zero at smooth points and, more generally, at Q-homology-manifold points.
inline long long sigma_tilde(const SectorTable& t) {
    long long acc = 0;
    const int n = static_cast<int>(t.n);
    for (const auto& [w, by_level] : link_cohomology(t)) {
        if (w % 2 != 0) continue; // odd weights cancel by Hodge symmetry
        for (const auto& [p, dim] : by_level)
            acc += (((n - 1) + p) % 2 == 0) ? dim : -dim;
    }
    return acc;
}

/// Degree-0 comparison of the three L-classes of a degree-d hypersurface
/// X in P^{n+1} with the given isolated singularities: the class of the
/// smoothing Z, the constant-coefficient class of X, and the
/// intersection-complex class of X. Higher L_j(X) agree with the pushforward
/// of L_j(Z) and are reported as well.
///
/// Whether a degree-d hypersurface with the prescribed singularities exists
/// is not checked; that is the caller's responsibility.
struct LClassComparison {
    unsigned n = 0;
    long d = 1;
    Rational smooth_l0;         // L_0(Z)
    Rational constant_l0;       // L_0^c(X)
    Rational intersection_l0;   // L_0(X)
    long long constant_minus_intersection = 0; // L_0^c(X) - L_0(X)
    long long smooth_minus_constant = 0;       // L_0(Z) - L_0^c(X)
    long long smooth_minus_intersection = 0;   // L_0(Z) - L_0(X)
    std::map<unsigned, Rational> upper_classes; // L_j(X) for j > 0
};

inline LClassComparison compare_hypersurface_lclasses(unsigned n, long d,
                                                      const std::vector<SpectralPairSet>& sings) {
    if (n < 1) throw invalid_input("hypersurface dimension must be >= 1");
    for (const auto& s : sings)
        if (s.n() != n)
            throw invalid_input("singularity has germ dimension " + std::to_string(s.n()) +
                                ", hypersurface has dimension " + std::to_string(n));

    LClassComparison cmp;
    cmp.n = n;
    cmp.d = d;

    std::map<unsigned, Rational> push = lclass_hypersurface_pushforward(n, d);
    cmp.smooth_l0 = push.at(0);
    for (unsigned j = 1; j <= n; ++j) cmp.upper_classes[j] = push.at(j);

    for (const auto& s : sings) {
        std::map<int, SigmaPair> sig = sigma_table(sector_table(s));
        const int nn = static_cast<int>(n);
        for (const auto& [j, sp] : sig) {
            // L_0^c - L_0 = sum_{k>=0} (-1)^{k+1} sigma^{n+1+k}_1
            if (j >= nn + 1) {
                int k = j - (nn + 1);
                cmp.constant_minus_intersection += (k % 2 == 0) ? -sp.unipotent : sp.unipotent;
            }
            // L_0(Z) - L_0^c = sum_{k>=0} sigma^{n+1+2k}_1 + sigma^{n+2k}_{!=1}
            if (j >= nn + 1 && (j - (nn + 1)) % 2 == 0) cmp.smooth_minus_constant += sp.unipotent;
            if (j >= nn && (j - nn) % 2 == 0) cmp.smooth_minus_constant += sp.nonunipotent;
            // L_0(Z) - L_0 = sum_{k>=0} sigma^{n+2+2k}_1 + sigma^{n+2k}_{!=1}
            if (j >= nn + 2 && (j - (nn + 2)) % 2 == 0) cmp.smooth_minus_intersection += sp.unipotent;
            if (j >= nn && (j - nn) % 2 == 0) cmp.smooth_minus_intersection += sp.nonunipotent;
        }
    }

    cmp.constant_l0 = cmp.smooth_l0 - Rational(cmp.smooth_minus_constant);
    cmp.intersection_l0 = cmp.smooth_l0 - Rational(cmp.smooth_minus_intersection);
    return cmp;
}

} // namespace lgenus
