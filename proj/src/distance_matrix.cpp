#include "ipset/distance_matrix.hpp"

#include "ipset/errors.hpp"

#include <algorithm>

namespace ipset {

namespace {

template <typename T>
DistanceMatrix rows_to_matrix(const std::vector<std::vector<T>>& rows)
{
    DistanceMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw DomainError("distance matrix row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " + std::to_string(rows.size()));
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

} // namespace

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<Integer>>& rows)
{
    return rows_to_matrix(rows);
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    return rows_to_matrix(rows);
}

void DistanceMatrix::set_symmetric(std::size_t i, std::size_t j, const Integer& v)
{
    at(i, j) = v;
    at(j, i) = v;
}

std::optional<std::string> DistanceMatrix::invariant_violation() const
{
    for (std::size_t i = 0; i < n_; ++i) {
        if ((*this)(i, i) != 0)
            return "diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") is nonzero";
        for (std::size_t j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) != (*this)(j, i))
                return "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and (" +
                       std::to_string(j + 1) + "," + std::to_string(i + 1) + ") differ";
            if ((*this)(i, j) < 1)
                return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not positive";
        }
    }
    return std::nullopt;
}

void DistanceMatrix::require_valid() const
{
    if (auto why = invariant_violation())
        throw DomainError("invalid distance matrix: " + *why);
}

Integer DistanceMatrix::diameter() const
{
    Integer best = 0;
    for (const auto& v : d_)
        if (v > best)
            best = v;
    return best;
}

std::vector<Integer> DistanceMatrix::upper_vector() const
{
    std::vector<Integer> v;
    v.reserve(n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2);
    for (std::size_t j = 1; j < n_; ++j)
        for (std::size_t i = 0; i < j; ++i)
            v.push_back((*this)(i, j));
    return v;
}

DistanceMatrix DistanceMatrix::permuted(std::span<const std::size_t> perm) const
{
    if (perm.size() != n_)
        throw DomainError("permutation length does not match matrix size");
    DistanceMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out.at(i, j) = (*this)(perm[i], perm[j]);
    return out;
}

} // namespace ipset
