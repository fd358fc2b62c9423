#include "ipset/integer.hpp"

#include "ipset/errors.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace ipset {

namespace {

constexpr unsigned kTrialLimit = 1'000'000;

const std::vector<unsigned>& small_primes()
{
    static const std::vector<unsigned> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned> out;
        for (unsigned p = 2; p <= kTrialLimit; ++p) {
            if (composite[p])
                continue;
            out.push_back(p);
            for (unsigned long long q = 1ULL * p * p; q <= kTrialLimit; q += p)
                composite[q] = true;
        }
        return out;
    }();
    return primes;
}

// Brent's variant of Pollard's rho; n odd composite, not a perfect power of 2.
Integer rho_factor(const Integer& n)
{
    Integer c = 1;
    while (true) {
        Integer x = 2, y = 2, g = 1, q = 1, ys;
        auto f = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = x - y;
                    q = q * abs(diff);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
        ++c;
    }
}

// Appends the prime factors of n (none below kTrialLimit), with multiplicity.
void accumulate_large(const Integer& n, std::vector<Integer>& primes)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    if (auto s = isqrt(n); s.is_perfect_square) {
        accumulate_large(s.root, primes);
        accumulate_large(s.root, primes);
        return;
    }
    Integer f = rho_factor(n);
    accumulate_large(f, primes);
    accumulate_large(n / f, primes);
}

} // namespace

SqrtResult isqrt(const Integer& n)
{
    if (n < 0)
        throw DomainError("isqrt of negative integer");
    SqrtResult out;
    Integer rem;
    mpz_sqrtrem(out.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    out.is_perfect_square = rem == 0;
    return out;
}

bool is_probable_prime(const Integer& n)
{
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<PrimePower> factorize(const Integer& n)
{
    if (n <= 0)
        throw DomainError("factorization requires a positive integer");
    std::vector<PrimePower> out;
    Integer rest = n;
    for (unsigned p : small_primes()) {
        if (rest < static_cast<unsigned long>(p) * p)
            break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0)
            continue;
        PrimePower pp{Integer(p), 0};
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++pp.exponent;
        }
        out.push_back(std::move(pp));
    }
    if (rest == 1)
        return out;
    if (rest < static_cast<unsigned long>(kTrialLimit) * kTrialLimit) {
        out.push_back({rest, 1}); // prime: every smaller factor was divided out
        return out;
    }
    std::vector<Integer> primes;
    accumulate_large(rest, primes);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i])
            ++j;
        out.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return out;
}

Integer squarefree_part(const Integer& n)
{
    if (n <= 0)
        throw DomainError("squarefree_part requires a positive integer");
    Integer result = 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2 == 1)
            result *= p;
    return result;
}

bool is_squarefree(const Integer& n)
{
    return n > 0 && squarefree_part(n) == n;
}

Integer to_integer(unsigned __int128 v)
{
    Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
    Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
    hi <<= 64;
    return hi + lo;
}

Integer to_integer(__int128 v)
{
    if (v >= 0)
        return to_integer(static_cast<unsigned __int128>(v));
    return -to_integer(static_cast<unsigned __int128>(-(v + 1)) + 1);
}

__int128 to_int128(const Integer& v)
{
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 126)
        throw DomainError("integer does not fit in 128 bits: " + v.get_str());
    Integer mag = abs(v);
    Integer hi = mag >> 64;
    Integer lo = mag - (hi << 64);
    auto out = static_cast<__int128>((static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui());
    return v < 0 ? -out : out;
}

std::string to_string(unsigned __int128 v)
{
    if (v == 0)
        return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(__int128 v)
{
    if (v < 0)
        return "-" + to_string(static_cast<unsigned __int128>(-(v + 1)) + 1);
    return to_string(static_cast<unsigned __int128>(v));
}

Integer parse_integer(const std::string& text)
{
    std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (i == text.size() || !std::all_of(text.begin() + static_cast<long>(i), text.end(),
                                         [](unsigned char c) { return std::isdigit(c) != 0; }))
        throw DomainError("not a decimal integer: '" + text + "'");
    return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

} // namespace ipset
