#pragma once

#include "ipset/distance_matrix.hpp"
#include "ipset/embedding.hpp"

#include <cstddef>

namespace ipset::detail {

// base1 at the origin, base2 on the positive x axis, apex above it. Points on
// the base line are accepted only with allow_on_axis.
EmbeddedPointSet place_on_base(const DistanceMatrix& m, std::size_t base1, std::size_t base2, std::size_t apex,
                               bool allow_on_axis);

// All points on the x axis, p1 at the origin.
EmbeddedPointSet place_on_line(const DistanceMatrix& m);

} // namespace ipset::detail
