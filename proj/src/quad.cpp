#include "ipset/quad.hpp"

#include "ipset/errors.hpp"

namespace ipset {

namespace {

void require_radicand(const Integer& k)
{
    if (!is_squarefree(k))
        throw DomainError("radicand must be a positive square-free integer, got " + k.get_str());
}

} // namespace

QuadElem::QuadElem(Integer k) : k_(std::move(k))
{
    require_radicand(k_);
}

QuadElem::QuadElem(Rational a, Rational b, Integer k)
    : a_(std::move(a)), b_(std::move(b)), k_(std::move(k))
{
    require_radicand(k_);
    if (k_ == 1) {
        a_ += b_;
        b_ = Rational{};
    }
}

QuadElem::QuadElem(Rational a, Rational b, Integer k, Trusted)
    : a_(std::move(a)), b_(std::move(b)), k_(std::move(k))
{
    if (k_ == 1 && !b_.is_zero()) {
        a_ += b_;
        b_ = Rational{};
    }
}

void QuadElem::require_same_field(const QuadElem& other) const
{
    if (k_ != other.k_)
        throw DomainError("radicand mismatch: sqrt(" + k_.get_str() + ") vs sqrt(" + other.k_.get_str() + ")");
}

QuadElem QuadElem::conjugate() const
{
    return {a_, -b_, k_, Trusted{}};
}

Rational QuadElem::norm() const
{
    return a_ * a_ - Rational(k_) * b_ * b_;
}

QuadElem QuadElem::inverse() const
{
    if (is_zero())
        throw DomainError("division by zero in Q(sqrt(" + k_.get_str() + "))");
    const Rational n = norm();
    return {a_ / n, -b_ / n, k_, Trusted{}};
}

QuadElem QuadElem::operator-() const
{
    return {-a_, -b_, k_, Trusted{}};
}

QuadElem& QuadElem::operator+=(const QuadElem& rhs)
{
    require_same_field(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& rhs)
{
    require_same_field(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& rhs)
{
    require_same_field(rhs);
    // (a + b r)(c + d r) = (ac + bd k) + (ad + bc) r
    Rational a = a_ * rhs.a_ + Rational(k_) * b_ * rhs.b_;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& rhs)
{
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

std::string QuadElem::str() const
{
    return a_.str() + " + " + b_.str() + "*sqrt(" + k_.get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x)
{
    return os << x.str();
}

} // namespace ipset
