#pragma once

#include "ipset/integer.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ipset {

/// n x n matrix of pairwise distances.
///
/// The type can hold arbitrary data so that malformed input can be diagnosed;
/// operations that need a metric call require_valid() first. A valid matrix
/// is symmetric with a zero diagonal and off-diagonal entries >= 1.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, Integer(0)) {}

    /// Rows must form a square; no metric validation.
    static DistanceMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
    static DistanceMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t size() const noexcept { return n_; }

    const Integer& operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    Integer& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
    void set_symmetric(std::size_t i, std::size_t j, const Integer& v);

    /// First violated invariant, if any.
    std::optional<std::string> invariant_violation() const;
    bool is_valid() const { return !invariant_violation(); }
    /// Throws DomainError describing the first violation.
    void require_valid() const;

    /// Largest entry; 0 for n < 2.
    Integer diameter() const;

    /// Upper-right triangle read column by column: (d12, d13, d23, d14, d24, d34, ...).
    std::vector<Integer> upper_vector() const;

    /// Relabeled matrix: new point i is old point perm[i].
    DistanceMatrix permuted(std::span<const std::size_t> perm) const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Integer> d_;
};

} // namespace ipset
