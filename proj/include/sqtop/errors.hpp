#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqtop {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression text could not be tokenized or parsed; `pos` is a 0-based
// character offset into the offending expression.
struct SyntaxError : Error {
    std::size_t pos;
    SyntaxError(const std::string& msg, std::size_t pos_)
        : Error(msg + " (at offset " + std::to_string(pos_) + ")"), pos(pos_) {}
};

// Identifier is neither a generator nor a parameter of the presentation.
struct UnknownIdentifier : Error {
    using Error::Error;
};

struct NegativeExponent : Error {
    using Error::Error;
};

// Operands belong to different presentations or coefficient domains.
struct DomainMismatch : Error {
    using Error::Error;
};

struct InhomogeneousRelation : Error {
    using Error::Error;
};

struct InhomogeneousInput : Error {
    using Error::Error;
};

// Requested degree exceeds the ring dimension.
struct DimensionOverflow : Error {
    using Error::Error;
};

// A square evaluation would land above the top degree.
struct DegreeOverflow : Error {
    using Error::Error;
};

// Betti profile violates Poincare duality (b_n != 1 or b_i != b_{n-i}).
struct NotPoincare : Error {
    using Error::Error;
};

struct DegeneratePairing : Error {
    using Error::Error;
};

struct TorsionPresent : Error {
    using Error::Error;
};

// A required square-table entry could not be established at build time.
struct MissingEntry : Error {
    using Error::Error;
};

// An evaluation touched a table entry that is unavailable; `entry` names the
// root cause, e.g. "Sq^16 y20".
struct TableIncomplete : Error {
    std::string entry;
    explicit TableIncomplete(const std::string& entry_)
        : Error("square table incomplete: missing " + entry_), entry(entry_) {}
};

struct OddMiddleTorsion : Error {
    using Error::Error;
};

struct NotApplicable : Error {
    using Error::Error;
};

struct UnknownName : Error {
    using Error::Error;
};

// Manifest file violates the input schema.
struct ManifestError : Error {
    using Error::Error;
};

}  // namespace sqtop
