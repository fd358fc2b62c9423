#include "ipset/embedding.hpp"

#include "ipset/embedding_detail.hpp"
#include "ipset/errors.hpp"
#include "ipset/geometry.hpp"

namespace ipset {

namespace {

std::string label(std::size_t i)
{
    return "p" + std::to_string(i + 1);
}

} // namespace

Rational EmbeddedPointSet::squared_distance(std::size_t i, std::size_t j) const
{
    const Rational dx = points[i].x - points[j].x;
    const Rational dy = points[i].y_coeff - points[j].y_coeff;
    return dx * dx + Rational(k) * dy * dy;
}

namespace detail {

EmbeddedPointSet place_on_base(const DistanceMatrix& m, std::size_t base1, std::size_t base2, std::size_t apex,
                               bool allow_on_axis)
{
    const std::size_t n = m.size();
    const Integer& d = m(base1, base2);
    const Integer d_sq = d * d;
    const Integer two_d = 2 * d;
    auto x_of = [&](std::size_t p) {
        return Rational(d_sq + m(base1, p) * m(base1, p) - m(base2, p) * m(base2, p), two_d);
    };

    EmbeddedPointSet out;
    out.k = triangle_characteristic(d, m(base1, apex), m(base2, apex));
    out.points.resize(n);
    out.points[base1] = {Rational{}, Rational{}};
    out.points[base2] = {Rational(d), Rational{}};

    // 16 * area^2 = (2d * y)^2 = heron product = k * s^2
    const Integer apex_scaled_sq = heron_product(d, m(base1, apex), m(base2, apex)) / out.k;
    const auto s = isqrt(apex_scaled_sq);
    out.points[apex] = {x_of(apex), Rational(s.root, two_d)};

    const Rational k_rat(out.k);
    for (std::size_t p = 0; p < n; ++p) {
        if (p == base1 || p == base2 || p == apex)
            continue;
        const Rational x = x_of(p);
        const Rational y_sq = Rational(m(base1, p) * m(base1, p)) - x * x;
        if (y_sq.sign() < 0)
            throw GeometryError(GeometryErrorKind::NotRealizable,
                                label(p) + " violates the triangle inequality with " + label(base1) + "," + label(base2));
        if (y_sq.is_zero()) {
            if (!allow_on_axis)
                throw GeometryError(GeometryErrorKind::CollinearBase,
                                    label(p) + " lies on the line through " + label(base1) + " and " + label(base2));
            out.points[p] = {x, Rational{}};
            continue;
        }
        const auto coeff = rational_sqrt(y_sq / k_rat);
        if (!coeff)
            throw GeometryError(GeometryErrorKind::NotRealizable,
                                "y^2 of " + label(p) + " is not a rational square times " + out.k.get_str());
        const Integer target = m(apex, p) * m(apex, p);
        bool placed = false;
        for (const Rational& y : {*coeff, -*coeff}) {
            out.points[p] = {x, y};
            if (out.squared_distance(apex, p) == Rational(target)) {
                placed = true;
                break;
            }
        }
        if (!placed)
            throw GeometryError(GeometryErrorKind::NotRealizable,
                                "no side of the base line matches d(" + label(apex) + "," + label(p) + ")");
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (out.squared_distance(i, j) != Rational(m(i, j) * m(i, j)))
                throw GeometryError(GeometryErrorKind::NotRealizable,
                                    "placed points give d(" + label(i) + "," + label(j) + ")^2 = " +
                                        out.squared_distance(i, j).str() + ", expected " + m(i, j).get_str() + "^2");
    return out;
}

EmbeddedPointSet place_on_line(const DistanceMatrix& m)
{
    const std::size_t n = m.size();
    EmbeddedPointSet out;
    out.points.resize(n);
    if (n >= 2)
        out.points[1] = {Rational(m(0, 1)), Rational{}};
    for (std::size_t p = 2; p < n; ++p) {
        bool placed = false;
        for (int sign : {1, -1}) {
            out.points[p] = {Rational(sign * m(0, p)), Rational{}};
            if (out.squared_distance(1, p) == Rational(m(1, p) * m(1, p))) {
                placed = true;
                break;
            }
        }
        if (!placed)
            throw GeometryError(GeometryErrorKind::NotRealizable, "no position on the line fits " + label(p));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (out.squared_distance(i, j) != Rational(m(i, j) * m(i, j)))
                throw GeometryError(GeometryErrorKind::NotRealizable,
                                    "collinear placement breaks d(" + label(i) + "," + label(j) + ")");
    return out;
}

} // namespace detail

EmbeddedPointSet embed(const DistanceMatrix& m)
{
    m.require_valid();
    if (m.size() < 3)
        throw DomainError("embedding needs at least three points");
    // Raises DegenerateTriangle / NotATriangle for a bad p1,p2,p3.
    triangle_characteristic(m(0, 1), m(0, 2), m(1, 2));
    return detail::place_on_base(m, 0, 1, 2, false);
}

DistanceReadback distances_from_embedding(const EmbeddedPointSet& e)
{
    const std::size_t n = e.points.size();
    DistanceReadback out{DistanceMatrix(n), {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational sq = e.squared_distance(i, j);
            const auto root = rational_sqrt(sq);
            if (!root || !root->is_integer())
                throw GeometryError(GeometryErrorKind::NonIntegralDistance,
                                    "d(" + label(i) + "," + label(j) + ")^2 = " + sq.str());
            if (root->is_zero())
                out.coincident.emplace_back(i, j);
            out.matrix.set_symmetric(i, j, root->num());
        }
    return out;
}

bool is_concyclic_or_collinear(const std::array<QuadPoint, 4>& pts)
{
    // Subtracting the first row of det[x^2+y^2, x, y, 1] leaves a 3x3 minor.
    auto row = [&](std::size_t r) {
        const QuadElem dx = pts[r].x - pts[0].x;
        const QuadElem dy = pts[r].y - pts[0].y;
        return std::array<QuadElem, 3>{dx * dx + dy * dy, dx, dy};
    };
    const std::array<std::array<QuadElem, 3>, 3> rows{row(1), row(2), row(3)};
    const QuadElem det = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
                         rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
                         rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
    return det.is_zero();
}

bool is_concyclic_or_collinear(const EmbeddedPointSet& e, std::size_t i, std::size_t j, std::size_t l, std::size_t m)
{
    auto at = [&](std::size_t p) { return QuadPoint{e.x_value(p), e.y_value(p)}; };
    return is_concyclic_or_collinear({at(i), at(j), at(l), at(m)});
}

} // namespace ipset
