#include "ipset/errors.hpp"

namespace ipset {

const char* to_string(GeometryErrorKind kind) noexcept
{
    switch (kind) {
    case GeometryErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case GeometryErrorKind::NotATriangle: return "NotATriangle";
    case GeometryErrorKind::NotATriple: return "NotATriple";
    case GeometryErrorKind::NotRealizable: return "NotRealizable";
    case GeometryErrorKind::CollinearBase: return "CollinearBase";
    case GeometryErrorKind::NonIntegralDistance: return "NonIntegralDistance";
    case GeometryErrorKind::CharacteristicMismatch: return "CharacteristicMismatch";
    }
    return "GeometryError";
}

GeometryError::GeometryError(GeometryErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind)
{
}

} // namespace ipset
