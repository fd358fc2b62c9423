#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ipset {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

struct SqrtResult {
    Integer root;
    bool is_perfect_square = false;
};

/// Floor square root; throws DomainError for n < 0.
SqrtResult isqrt(const Integer& n);

/// The unique square-free m with n = m * s^2. Throws DomainError for n <= 0.
///
/// Trial division by the primes below 10^6 removes small factors; a remaining
/// cofactor is split with Pollard's rho until every piece is a probable prime.
Integer squarefree_part(const Integer& n);

bool is_squarefree(const Integer& n);

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;
};

/// Prime factorization of n >= 1 in ascending prime order (same strategy as
/// squarefree_part). Throws DomainError for n <= 0.
std::vector<PrimePower> factorize(const Integer& n);

bool is_probable_prime(const Integer& n);

Integer to_integer(__int128 v);
Integer to_integer(unsigned __int128 v);

/// Exact conversion; throws DomainError if v does not fit.
__int128 to_int128(const Integer& v);

std::string to_string(unsigned __int128 v);
std::string to_string(__int128 v);

/// Parses an optionally signed decimal string; throws DomainError on junk.
Integer parse_integer(const std::string& text);

} // namespace ipset
