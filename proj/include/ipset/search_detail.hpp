#pragma once

#include <cstdint>
#include <vector>

namespace ipset::detail {

/// n = squarefree * root^2
struct SquareSplit {
    std::uint64_t squarefree = 1;
    std::uint64_t root = 1;
};

/// Smallest-prime-factor table for splitting integers up to `limit`.
class SquarefreeSieve {
public:
    explicit SquarefreeSieve(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    /// 1 <= n <= limit
    SquareSplit split(std::uint64_t n) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
};

/// Split of x*y from the splits of x and y.
struct WideSplit {
    unsigned __int128 squarefree = 1;
    unsigned __int128 root = 1;
};
WideSplit combine(const SquareSplit& x, const SquareSplit& y);

/// Characteristic of the strict triangle (a, b, c) via the sieve; every side
/// must be <= sieve.limit() / 3.
unsigned __int128 fast_characteristic(const SquarefreeSieve& sieve, std::int64_t a, std::int64_t b, std::int64_t c);

/// floor(sqrt(n)) for 128-bit n.
unsigned __int128 isqrt_u128(unsigned __int128 n);

} // namespace ipset::detail
