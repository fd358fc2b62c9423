#pragma once

#include "ipset/distance_matrix.hpp"
#include "ipset/embedding.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ipset {

struct CheckResult {
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    CheckResult well_formed;         // symmetric, zero diagonal, positive entries
    CheckResult triangle_inequality; // every triple strict
    CheckResult realizable;          // exact planar embedding exists
    CheckResult no_three_collinear;
    CheckResult no_four_concyclic;
    CheckResult uniform_characteristic;
    CheckResult canonical;
    CheckResult diameter;            // largest entry sits at d12

    Integer diameter_value = 0;
    std::optional<Integer> characteristic;
    /// Characteristic 1: candidate for an integral-coordinate cluster.
    bool cluster_candidate = false;
    std::optional<EmbeddedPointSet> embedding;

    bool passed() const;
    std::vector<std::pair<std::string_view, const CheckResult*>> checks() const;
};

/// Runs every check; never throws on bad input, failures land in the report.
VerificationReport verify(const DistanceMatrix& m);

} // namespace ipset
