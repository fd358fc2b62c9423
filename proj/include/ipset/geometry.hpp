#pragma once

#include "ipset/distance_matrix.hpp"
#include "ipset/integer.hpp"

namespace ipset {

/// (a+b+c)(a+b-c)(a-b+c)(-a+b+c), sixteen times the squared area.
Integer heron_product(const Integer& a, const Integer& b, const Integer& c);

/// Square-free part of heron_product(a, b, c).
///
/// Throws GeometryError: DegenerateTriangle when a factor vanishes,
/// NotATriangle when a triangle inequality is violated.
Integer triangle_characteristic(const Integer& a, const Integer& b, const Integer& c);

/// True when one triangle inequality is tight. Sides must be >= 0 and form a
/// (possibly degenerate) metric triple, else GeometryError NotATriple.
bool is_collinear_triple(const Integer& a, const Integer& b, const Integer& c);

/// The characteristic shared by all triangles of m (n >= 3). Throws
/// GeometryError DegenerateTriangle, or CharacteristicMismatch naming the first
/// triangle that disagrees with triangle (1,2,3).
Integer pointset_characteristic(const DistanceMatrix& m);

} // namespace ipset
