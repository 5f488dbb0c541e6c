#pragma once

#include <stdexcept>
#include <string>

namespace lgenus {

/// Two values from incompatible coefficient domains were combined
/// (e.g. degree polynomials of different arity).
struct kind_mismatch : std::invalid_argument {
    explicit kind_mismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Inversion of something that is not a unit (zero rational, series whose
/// constant term is zero or a non-constant polynomial).
struct non_unit_error : std::domain_error {
    explicit non_unit_error(const std::string& msg) : std::domain_error(msg) {}
};

/// A singularity specification violates its constraints (exponent < 2, ...).
struct invalid_spec : std::invalid_argument {
    explicit invalid_spec(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Join requested on spectra that do not follow the quasi-homogeneous
/// weight rule.
struct unsupported_join : std::invalid_argument {
    explicit unsupported_join(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Malformed user input: bad files, mismatched germ dimensions,
/// corrupt checkpoints.
struct invalid_input : std::invalid_argument {
    explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

/// An internal consistency check failed; signals an arithmetic bug,
/// not a user error.
struct internal_inconsistency : std::logic_error {
    explicit internal_inconsistency(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace lgenus
