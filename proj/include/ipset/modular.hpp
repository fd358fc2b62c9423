#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ipset {

/// Largest modulus ModContext accepts; its tables grow like n^4 bits.
inline constexpr int kMaxModulus = 100;

/// A point of Z_n^2, coordinates in [0, n).
struct ModPoint {
    int u = 0;
    int v = 0;

    friend bool operator==(const ModPoint&, const ModPoint&) = default;
    friend auto operator<=>(const ModPoint&, const ModPoint&) = default;
};

/// Precomputed tables for one modulus. Immutable once built.
class ModContext {
public:
    explicit ModContext(int n);

    int modulus() const noexcept { return n_; }
    /// d^2 mod n for some d
    bool is_square(int residue) const { return squares_[static_cast<std::size_t>(residue)]; }
    /// r^2 mod n for some r != 0
    bool is_radius(int residue) const { return radii_[static_cast<std::size_t>(residue)]; }
    std::vector<int> squares() const;

    std::size_t index(const ModPoint& p) const { return static_cast<std::size_t>(p.u * n_ + p.v); }
    ModPoint point(std::size_t index) const;
    /// p - q reduced
    ModPoint difference(const ModPoint& p, const ModPoint& q) const;
    void require_reduced(const ModPoint& p) const;

    std::size_t words() const noexcept { return words_; }
    /// Directions t (as bits) whose line {w t} contains the difference.
    const std::uint64_t* lines_through(const ModPoint& diff) const;
    /// Offsets c with |c - diff|^2 = |c|^2.
    const std::uint64_t* equidistant(const ModPoint& diff) const;
    /// Offsets c with |c|^2 a nonzero radius square.
    const std::uint64_t* radius_mask() const { return radius_mask_.data(); }

private:
    int n_;
    std::size_t words_;
    std::vector<bool> squares_;
    std::vector<bool> radii_;
    std::vector<std::uint64_t> lines_;
    std::vector<std::uint64_t> equidistant_;
    std::vector<std::uint64_t> radius_mask_;
};

bool mod_integral_distance(const ModPoint& p, const ModPoint& q, const ModContext& ctx);
/// Any two points are collinear; requires at least two.
bool mod_is_collinear(std::span<const ModPoint> points, const ModContext& ctx);
bool mod_on_circle(const std::array<ModPoint, 4>& points, const ModContext& ctx);

struct ModSearchResult {
    int modulus = 0;
    std::size_t size = 0;
    /// Node budget ran out; size is only a lower bound.
    bool lower_bound = false;
    /// Sorted by (u, v).
    std::vector<ModPoint> witness;
    std::uint64_t nodes = 0;
};

/// Largest subset of Z_n^2 with pairwise integral distances, no three
/// collinear and no four on a circle. node_budget 0 means unlimited.
ModSearchResult mod_max_general_position(int n, std::uint64_t node_budget = 0);
ModSearchResult mod_max_general_position(const ModContext& ctx, std::uint64_t node_budget = 0);

} // namespace ipset
