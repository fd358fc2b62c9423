#pragma once

#include "ipset/integer.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <string>

namespace ipset {

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long v) : num_(v), den_(1) {} // NOLINT: implicit by intent
    Rational(const Integer& v) : num_(v), den_(1) {} // NOLINT
    Rational(Integer num, Integer den);

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Always "p/q", also for integers ("7/1").
    std::string str() const;

    /// Accepts "p/q" or "p".
    static Rational parse(const std::string& text);

    double to_double() const;

private:
    struct Unchecked {};
    Rational(Integer num, Integer den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Exact non-negative square root if q is the square of a rational.
/// Throws DomainError for q < 0.
std::optional<Rational> rational_sqrt(const Rational& q);

} // namespace ipset
