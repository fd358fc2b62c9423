#include "ipset/geometry.hpp"

#include "ipset/errors.hpp"

#include <array>

namespace ipset {

namespace {

std::array<Integer, 4> heron_factors(const Integer& a, const Integer& b, const Integer& c)
{
    return {a + b + c, a + b - c, a - b + c, -a + b + c};
}

std::string sides(const Integer& a, const Integer& b, const Integer& c)
{
    return "(" + a.get_str() + ", " + b.get_str() + ", " + c.get_str() + ")";
}

} // namespace

Integer heron_product(const Integer& a, const Integer& b, const Integer& c)
{
    const auto f = heron_factors(a, b, c);
    return f[0] * f[1] * f[2] * f[3];
}

Integer triangle_characteristic(const Integer& a, const Integer& b, const Integer& c)
{
    if (a < 1 || b < 1 || c < 1)
        throw GeometryError(GeometryErrorKind::NotATriangle, "non-positive side in " + sides(a, b, c));
    const auto f = heron_factors(a, b, c);
    for (const auto& x : f)
        if (x < 0)
            throw GeometryError(GeometryErrorKind::NotATriangle, "triangle inequality violated by " + sides(a, b, c));
    for (const auto& x : f)
        if (x == 0)
            throw GeometryError(GeometryErrorKind::DegenerateTriangle, sides(a, b, c) + " is degenerate");
    return squarefree_part(f[0] * f[1] * f[2] * f[3]);
}

bool is_collinear_triple(const Integer& a, const Integer& b, const Integer& c)
{
    if (a < 0 || b < 0 || c < 0)
        throw GeometryError(GeometryErrorKind::NotATriple, "negative distance in " + sides(a, b, c));
    const auto f = heron_factors(a, b, c);
    bool tight = false;
    for (const auto& x : f) {
        if (x < 0)
            throw GeometryError(GeometryErrorKind::NotATriple, "triangle inequality violated by " + sides(a, b, c));
        tight = tight || x == 0;
    }
    return tight;
}

Integer pointset_characteristic(const DistanceMatrix& m)
{
    m.require_valid();
    const std::size_t n = m.size();
    if (n < 3)
        throw DomainError("characteristic needs at least three points");
    Integer first;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l) {
                Integer k;
                try {
                    k = triangle_characteristic(m(i, j), m(i, l), m(j, l));
                } catch (const GeometryError& e) {
                    throw GeometryError(e.kind(), "triangle {" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                      "," + std::to_string(l + 1) + "}: " + e.what());
                }
                if (i == 0 && j == 1 && l == 2) {
                    first = k;
                } else if (k != first) {
                    throw GeometryError(GeometryErrorKind::CharacteristicMismatch,
                                        "triangle {1,2,3} has " + first.get_str() + " but triangle {" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                            std::to_string(l + 1) + "} has " + k.get_str());
                }
            }
    return first;
}

} // namespace ipset
