#include "ipset/rational.hpp"

#include "ipset/errors.hpp"

namespace ipset {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

void Rational::normalize()
{
    if (den_ == 0)
        throw DomainError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational Rational::operator-() const
{
    return {-num_, den_, Unchecked{}};
}

Rational& Rational::operator+=(const Rational& rhs)
{
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw DomainError("rational division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const
{
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::parse(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return {parse_integer(text)};
    return {parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1))};
}

double Rational::to_double() const
{
    mpq_class q(num_, den_);
    return q.get_d();
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.str();
}

std::optional<Rational> rational_sqrt(const Rational& q)
{
    if (q.sign() < 0)
        throw DomainError("square root of negative rational");
    const auto n = isqrt(q.num());
    if (!n.is_perfect_square)
        return std::nullopt;
    const auto d = isqrt(q.den());
    if (!d.is_perfect_square)
        return std::nullopt;
    return Rational(n.root, d.root);
}

} // namespace ipset
