#pragma once

#include <stdexcept>
#include <string>

namespace ipset {

/// Thrown when an operation is called outside its mathematical domain
/// (negative square root, mismatched radicands, division by zero, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed textual input (matrix files, records, checkpoints).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GeometryErrorKind {
    DegenerateTriangle,
    NotATriangle,
    NotATriple,
    NotRealizable,
    CollinearBase,
    NonIntegralDistance,
    CharacteristicMismatch,
};

const char* to_string(GeometryErrorKind kind) noexcept;

/// Failure of a geometric construction on a distance matrix or point set.
class GeometryError : public std::runtime_error {
public:
    GeometryError(GeometryErrorKind kind, const std::string& detail);

    GeometryErrorKind kind() const noexcept { return kind_; }

private:
    GeometryErrorKind kind_;
};

} // namespace ipset
