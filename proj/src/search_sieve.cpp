#include "ipset/search_detail.hpp"

#include "ipset/errors.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace ipset::detail {

namespace {

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b)
{
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

} // namespace

SquarefreeSieve::SquarefreeSieve(std::uint64_t limit) : limit_(limit), spf_(limit + 1, 0)
{
    if (limit > 0xFFFFFFFFULL)
        throw DomainError("sieve limit too large");
    for (std::uint64_t i = 2; i <= limit_; ++i) {
        if (spf_[i] != 0)
            continue;
        spf_[i] = static_cast<std::uint32_t>(i);
        for (std::uint64_t j = i * i; j <= limit_; j += i)
            if (spf_[j] == 0)
                spf_[j] = static_cast<std::uint32_t>(i);
    }
}

SquareSplit SquarefreeSieve::split(std::uint64_t n) const
{
    SquareSplit out;
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        unsigned e = 0;
        do {
            n /= p;
            ++e;
        } while (n % p == 0);
        if (e % 2 == 1)
            out.squarefree *= p;
        for (unsigned i = 0; i < e / 2; ++i)
            out.root *= p;
    }
    return out;
}

WideSplit combine(const SquareSplit& x, const SquareSplit& y)
{
    const std::uint64_t g = std::gcd(x.squarefree, y.squarefree);
    WideSplit out;
    out.squarefree = static_cast<unsigned __int128>(x.squarefree / g) * (y.squarefree / g);
    out.root = static_cast<unsigned __int128>(x.root) * y.root * g;
    return out;
}

unsigned __int128 fast_characteristic(const SquarefreeSieve& sieve, std::int64_t a, std::int64_t b, std::int64_t c)
{
    const auto f1 = combine(sieve.split(static_cast<std::uint64_t>(a + b + c)),
                            sieve.split(static_cast<std::uint64_t>(a + b - c)));
    const auto f2 = combine(sieve.split(static_cast<std::uint64_t>(a - b + c)),
                            sieve.split(static_cast<std::uint64_t>(-a + b + c)));
    const unsigned __int128 g = gcd_u128(f1.squarefree, f2.squarefree);
    return (f1.squarefree / g) * (f2.squarefree / g);
}

unsigned __int128 isqrt_u128(unsigned __int128 n)
{
    if (n == 0)
        return 0;
    auto r = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

} // namespace ipset::detail
