#pragma once

#include "ipset/distance_matrix.hpp"

#include <cstddef>
#include <vector>

namespace ipset {

struct CanonicalForm {
    DistanceMatrix matrix;
    /// matrix == input.permuted(relabeling)
    std::vector<std::size_t> relabeling;
};

/// Relabeling with the lexicographically largest upper_vector(); among equal
/// maximizers the lexicographically smallest permutation wins.
///
/// Branch and bound over partial labelings: a labeling of the first j points
/// fixes the first j columns of the vector, so only children whose next
/// column is maximal are expanded, and any prefix that falls below the best
/// complete vector is cut.
CanonicalForm canonical_form(const DistanceMatrix& m);

bool is_canonical(const DistanceMatrix& m);

} // namespace ipset
