#pragma once

#include "ipset/rational.hpp"

#include <ostream>
#include <string>

namespace ipset {

/// Element a + b*sqrt(k) of the field Q(sqrt(k)), k square-free and positive.
///
/// Elements only combine with elements of the same radicand. For k = 1 the
/// irrational part is folded into a, so equality stays componentwise.
class QuadElem {
public:
    /// Zero of Q(sqrt(k)).
    explicit QuadElem(Integer k);
    QuadElem(Rational a, Rational b, Integer k);

    static QuadElem rational(Rational a, Integer k) { return {std::move(a), Rational{}, std::move(k)}; }
    static QuadElem surd(Rational b, Integer k) { return {Rational{}, std::move(b), std::move(k)}; }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const Integer& k() const noexcept { return k_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadElem conjugate() const;
    /// a^2 - k b^2, the field norm.
    Rational norm() const;
    QuadElem inverse() const;

    QuadElem operator-() const;
    QuadElem& operator+=(const QuadElem& rhs);
    QuadElem& operator-=(const QuadElem& rhs);
    QuadElem& operator*=(const QuadElem& rhs);
    QuadElem& operator/=(const QuadElem& rhs);

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.k_ == y.k_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string str() const;

private:
    struct Trusted {};
    QuadElem(Rational a, Rational b, Integer k, Trusted);
    void require_same_field(const QuadElem& other) const;

    Rational a_;
    Rational b_;
    Integer k_;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

} // namespace ipset
