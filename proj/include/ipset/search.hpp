#pragma once

#include "ipset/distance_matrix.hpp"
#include "ipset/integer.hpp"
#include "ipset/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ipset {

/// Largest diameter the search kernels accept (exactness bound of the
/// 128-bit pair test).
inline constexpr std::int64_t kMaxSearchDiameter = 1'000'000;

/// Restriction on the characteristic of the point sets searched for.
struct CharFilter {
    enum class Kind { Any, Fixed, DivisorOf };

    Kind kind = Kind::Any;
    Integer value = 1;

    static CharFilter any() { return {}; }
    static CharFilter fixed(Integer k) { return {Kind::Fixed, std::move(k)}; }
    static CharFilter divisor_of(Integer k) { return {Kind::DivisorOf, std::move(k)}; }

    bool admits(const Integer& k) const;
    /// "any", "K" or "div:K"
    std::string str() const;
    /// Inverse of str(); throws DomainError on malformed or non-square-free values.
    static CharFilter parse(const std::string& text);
};

struct Shard {
    std::size_t index = 0;
    std::size_t total = 1;
};

struct SearchConfig {
    std::size_t target_n = 3;
    std::int64_t d_min = 1;
    std::int64_t d_max = 1;
    CharFilter char_filter;
    /// false keeps "no three collinear" but drops "no four concyclic".
    bool require_general_position = true;
    /// Characteristic 1 only (integral-coordinate clusters).
    bool cluster_mode = false;
    Shard shard;

    std::optional<std::string> validation_error() const;
    /// Throws DomainError with validation_error().
    void validate() const;
    /// char_filter combined with cluster_mode.
    CharFilter effective_filter() const;
};

/// Unit of the outer loop: base diameter d and characteristic k.
struct OuterKey {
    std::int64_t d = 0;
    Integer k = 1;

    friend bool operator==(const OuterKey& a, const OuterKey& b) { return a.d == b.d && a.k == b.k; }
    friend bool operator<(const OuterKey& a, const OuterKey& b) { return a.d != b.d ? a.d < b.d : a.k < b.k; }
};

bool shard_owns(const Shard& shard, const OuterKey& key);

struct Triangle {
    std::int64_t a = 0; // a >= b >= c
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Calls `visit` for every non-degenerate integer triangle with longest side
/// <= d_max whose characteristic passes `filter`, in decreasing
/// lexicographic (a, b, c) order.
void for_each_triangle(std::int64_t d_max, const CharFilter& filter, const std::function<void(const Triangle&)>& visit);

std::vector<Triangle> enumerate_triangles(std::int64_t d_max, const CharFilter& filter);
std::uint64_t count_triangles(std::int64_t d_max, const CharFilter& filter);

/// Point at distance a from p1 = (0,0) and b from p2 = (d_base, 0), located at
/// (x, y_coeff * sqrt(k)).
struct CandidatePoint {
    std::int64_t a = 0;
    std::int64_t b = 0;
    Rational x;
    Rational y_coeff;
    int sign = 1;

    friend bool operator==(const CandidatePoint&, const CandidatePoint&) = default;
};

/// All points with a, b <= d_max such that (d_base, a, b) is a strict triangle
/// of characteristic exactly k, both mirror images, ordered by (a, b, sign).
std::vector<CandidatePoint> candidate_points(std::int64_t d_base, const Integer& k, std::int64_t d_max);

/// Candidates over base d_base grouped by characteristic (ascending), keeping
/// only characteristics admitted by `filter`.
std::vector<std::pair<Integer, std::vector<CandidatePoint>>>
candidates_by_characteristic(std::int64_t d_base, std::int64_t d_max, const CharFilter& filter);

/// Integer distance between two candidates over the same base and radicand,
/// if their squared distance is a perfect square.
std::optional<Integer> integral_pair_check(const CandidatePoint& p, const CandidatePoint& q, std::int64_t d_base,
                                           const Integer& k);

/// Backtracking clique search in the compatibility graph of `candidates`
/// (edge = integral distance <= d_base). Each emitted (target_n)-set
/// {p1, p2, clique} has no collinear triple, no concyclic quadruple (unless
/// config.require_general_position is false), and diameter d_base. Results
/// are canonical, duplicate-free and sorted in decreasing vector order.
std::vector<DistanceMatrix> extend_cliques(std::span<const CandidatePoint> candidates, std::int64_t d_base,
                                           const Integer& k, const SearchConfig& config);

struct FoundSet {
    std::int64_t diameter = 0;
    Integer characteristic = 1;
    DistanceMatrix matrix; // canonical
};

struct SearchObserver {
    std::function<void(const FoundSet&)> on_result;
    /// Called after every result of a key has been reported.
    std::function<void(const OuterKey&)> on_key_done;
    /// Keys already completed (checkpoint resume).
    std::function<bool(const OuterKey&)> skip_key;
    /// Polled between keys.
    std::function<bool()> should_stop;
};

/// Every canonical general-position integral point set of config.target_n
/// points with diameter in [d_min, d_max] and admitted characteristic, each
/// exactly once, in (d, k) order. The base edge of each set is its diameter.
void search(const SearchConfig& config, const SearchObserver& observer);

std::vector<FoundSet> search_all(const SearchConfig& config);

/// Smallest diameter <= d_cap admitting target_n points in general position.
std::optional<std::int64_t> minimum_diameter(std::size_t target_n, std::int64_t d_cap, const CharFilter& filter);

/// total_shards copies of config covering the (d, k) keys disjointly.
std::vector<SearchConfig> partition(const SearchConfig& config, std::size_t total_shards);

} // namespace ipset
