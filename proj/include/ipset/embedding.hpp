#pragma once

#include "ipset/distance_matrix.hpp"
#include "ipset/quad.hpp"
#include "ipset/rational.hpp"

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace ipset {

/// Point (x, y_coeff * sqrt(k)) of an embedded set with radicand k.
struct EmbeddedPoint {
    Rational x;
    Rational y_coeff;

    friend bool operator==(const EmbeddedPoint&, const EmbeddedPoint&) = default;
};

/// Exact planar coordinates; all y coordinates share the radicand k.
struct EmbeddedPointSet {
    Integer k = 1;
    std::vector<EmbeddedPoint> points;

    QuadElem x_value(std::size_t i) const { return QuadElem::rational(points[i].x, k); }
    QuadElem y_value(std::size_t i) const { return QuadElem::surd(points[i].y_coeff, k); }

    /// Exact squared distance (rational: the sqrt(k) parts cancel).
    Rational squared_distance(std::size_t i, std::size_t j) const;

    friend bool operator==(const EmbeddedPointSet&, const EmbeddedPointSet&) = default;
};

/// Coordinates with p1 = (0,0), p2 = (d12, 0), p3 above the axis, and every
/// later point on the side that matches its distance to p3.
///
/// Throws GeometryError: CollinearBase if a point lands on the p1-p2 line,
/// NotRealizable if no exact planar placement reproduces m, and the
/// triangle errors for a degenerate p1,p2,p3.
EmbeddedPointSet embed(const DistanceMatrix& m);

struct DistanceReadback {
    DistanceMatrix matrix;
    /// Index pairs (i < j) of points at distance 0.
    std::vector<std::pair<std::size_t, std::size_t>> coincident;
};

/// Integer distance matrix of an embedding; GeometryError NonIntegralDistance
/// names the first pair whose squared distance is not a perfect square.
DistanceReadback distances_from_embedding(const EmbeddedPointSet& e);

struct QuadPoint {
    QuadElem x;
    QuadElem y;
};

/// Zero test of det[x^2+y^2, x, y, 1] over four points, exact in Q(sqrt(k)).
/// True iff the points lie on one circle or one line. Mismatched radicands
/// throw DomainError.
bool is_concyclic_or_collinear(const std::array<QuadPoint, 4>& pts);

bool is_concyclic_or_collinear(const EmbeddedPointSet& e, std::size_t i, std::size_t j, std::size_t l,
                               std::size_t m);

} // namespace ipset
